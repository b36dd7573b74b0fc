#!/usr/bin/env python
# coding: utf-8
from setuptools import setup

setup_args = dict(
    include_package_data=True,
    install_requires=[
        "numpy>=1.19.5",
        "scipy>=1.5.4",
        "scikit-learn>=0.23.2",
        "pandas>=1.1.5",
        "PyYAML>=5.1",
        "Pillow>=8.0.0",
        "scikit-image>=0.18.0",
        "joblib>=1.0.0",
    ],
    extras_require={
        "dev": [
            "setuptools==50.3.2",
            "flake8==4.0.1",
            "mypy==0.910",
            "pytest==6.2.5",
            "hypothesis==6.14.0",
            "types-PyYAML==6.0.1",
        ]
    },
    entry_points={
        "console_scripts": [
            "glyphcluster=glyphcluster.__main__:main",
        ],
    },
)

if __name__ == '__main__':
    setup(**setup_args)
