__description__ = """
packages/ holds the python tasks of waveguidepy.
Each is written as a separate package in its own folder.
"""
