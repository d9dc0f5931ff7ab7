from setuptools import setup


setup(
    name='coverdepth',
    description='Coverage depth of linear codes over finite fields',
    version='0.1',
    packages=['coverdepth'],
    python_requires='>=3.8',
    install_requires=['numpy', 'galois', 'pandas>=1.5'],
    extras_require={
        'parallel': ['mpi4py'],
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['coverdepth=coverdepth.cli:main'],
    },
)
