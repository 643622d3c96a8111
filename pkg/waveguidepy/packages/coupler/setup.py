

tasks = [
    'wgsweep', 'wgextrema', 'wgpresets', 'wgconvloss'
]
