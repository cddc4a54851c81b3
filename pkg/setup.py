#
# hybridgraph setuptools script
#
from setuptools import setup, find_packages


def get_version():
    """
    Get version number from the hybridgraph module.

    Importing ``hybridgraph`` directly would fail before numpy and scipy are
    installed, so the version_info module is imported on its own by
    temporarily adding the package directory to the pythonpath.
    """
    import os
    import sys

    sys.path.append(os.path.abspath('hybridgraph'))
    from version_info import VERSION as version
    sys.path.pop()

    return version


def get_readme():
    """
    Load README.md text for use as description.
    """
    with open('README.md') as f:
        return f.read()


# Go!
setup(
    # Module name (lowercase)
    name='hybridgraph',

    # Version
    version=get_version(),

    description='Hybrid graphs, shelling certificates and Cohen-Macaulay '
                'checks for edge ideals',

    long_description=get_readme(),

    long_description_content_type='text/markdown',

    license='Apache 2.0',

    # Packages to include
    packages=find_packages(include=('hybridgraph', 'hybridgraph.*')),

    python_requires='>=3.7',

    # List of dependencies
    install_requires=[
        'numpy',
        'scipy',
    ],
    extras_require={
        'docs': [
            # Sphinx for doc generation. Version 1.7.3 has a bug:
            'sphinx>=1.5, !=1.7.3',
            # Nice theme for docs
            'sphinx_rtd_theme',
        ],
        'dev': [
            # Flake8 for code style checking
            'flake8>=3',
            # Reference chordality and clique routines for the tests
            'networkx>=2.4',
        ],
    },
    entry_points={
        'console_scripts': [
            'hybridgraph=hybridgraph.cli:main',
        ],
    },
)
