import re
from pathlib import Path

from setuptools import find_packages, setup

PACKAGE_NAME = 'squintpy'


def _read_version():
    text = (Path(__file__).parent / PACKAGE_NAME / '_version.py').read_text(encoding='utf-8')
    return re.search(r"^__version__ = ['\"]([^'\"]+)['\"]", text, re.M).group(1)


install_requires = [
    'numpy >=1.17',
    'nlopt >=2.6',
    'scipy >=1.4',
    'statsmodels >=0.10',
    'pandas >=1.0'
]

tests_require = [
    "hypothesis",
    "pytest",
    "pytest-cov"
]

setup(
    name=PACKAGE_NAME,
    license='MIT',
    version=_read_version(),
    description='Beam squint simulator and cost-performance advisor for wideband hybrid beamformers',
    packages=find_packages(include=['squintpy', 'squintpy.*']),
    package_data={
        'squintpy.datasets': ['data/*.txt', 'data/*.csv'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Telecommunications Industry',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering'
    ],
    install_requires=install_requires,
    include_package_data=True,
    python_requires='>=3.7',
    extras_require={
        "test": tests_require
    },
    entry_points={
        'console_scripts': ['squintpy = squintpy.cli:main'],
    },
    zip_safe=False
)
