
from setuptools import setup, find_packages
import os
import sys


PACKAGE_DIR = os.path.join('waveguidepy', 'packages')


def _find_py_packages():
    """Sub-packages of waveguidepy/packages: folders with a setup.py"""
    return [p for p in sorted(os.listdir(PACKAGE_DIR))
            if os.path.exists(os.path.join(PACKAGE_DIR, p, 'setup.py'))]


def _read_package_setup(package):
    """Read the tasks and requirements of packages/{package}/setup.py"""
    pars = {}
    with open(os.path.join(PACKAGE_DIR, package, 'setup.py')) as fp:
        exec(fp.read(), pars)
    if not 'tasks' in pars:
        sys.exit(f'No tasks variable defined in {package}/setup.py. Stopping.')
    tasks = pars['tasks']

    requirements = pars.get('requirements', [])
    reqfile = os.path.join(PACKAGE_DIR, package, 'requirements.txt')
    if len(requirements) == 0 and os.path.exists(reqfile):
        with open(reqfile) as fp:
            requirements = [r.strip() for r in fp.readlines()
                            if not r.startswith('#') and len(r.strip()) != 0]
    return tasks, requirements


def build_requirements():
    """Build a list of requirements from the main and sub-packages"""
    with open('requirements.txt') as fp:
        requirements = fp.readlines()
    requirements = [r.strip() for r in requirements
                    if not r.startswith('#') and len(r.strip()) != 0]

    for package in _find_py_packages():
        tasks, reqs = _read_package_setup(package)
        for r in reqs:
            if not r in requirements:
                requirements.append(r)
    return requirements


def task_scripts():
    """The executable {task}.py of every task, installed as scripts"""
    scripts = []
    for package in _find_py_packages():
        tasks, _ = _read_package_setup(package)
        scripts += [os.path.join(PACKAGE_DIR, package, task, f'{task}.py') for task in tasks]
    return scripts


with open('README.md') as f:
    readme = f.read()

with open('waveguidepy/version.py') as f:
    lines = f.readlines()
    version = [l for l in lines if '__version__' in l][0].split('=')[1].replace("'", "").strip()


setup(
    name='waveguidepy',
    version=version,
    description='Entanglement of photon-number and squeezed light in coupled lossy waveguides',
    long_description=readme,
    long_description_content_type='text/markdown',
    license='BSD-3-Clause',
    packages=find_packages(exclude=('tests',)),
    package_data={'waveguidepy.packages.coupler': ['*/*.par', 'configs/*.cfg']},
    scripts=task_scripts(),
    python_requires=">=3.7",
    install_requires=build_requirements(),
    entry_points={
        'console_scripts': ['waveguidepy=waveguidepy.cli:main'],
    },
    tests_require=['pytest'],
)
