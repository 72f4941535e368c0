from setuptools import setup, find_packages


def read_requirements(path='requirements.txt'):
    with open(path, 'r') as f:
        return [line.strip() for line in f if line.strip() and not line.startswith('#')]


setup(
    name='gtsij',
    version='0.1.0',
    description='Sijections between Gelfand-Tsetlin patterns, monotone triangles and alternating sign matrices',
    packages=find_packages(include=['gtsij', 'gtsij.*']),  # Only include the gtsij package
    python_requires='>=3.8',  # Specify the minimum Python version
    install_requires=read_requirements(),
    entry_points={
        'console_scripts': ['gtsij = gtsij.cli:main'],
    },
)
