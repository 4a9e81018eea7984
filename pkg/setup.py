import setuptools

version = open('lagfib/version.py').read().split('=')[1].strip().strip("'")

scripts = [
    'bin/lagfib',
]

testing_files = [
    "test/golden/census.csv",
    "test/golden/census.json",
    "test/records/s2.json",
    "test/records/k2.json",
    "test/records/bad-weight.yml",
    "test/example.ini",
    "test/included.ini",
]

requirements = [
    "pyyaml",
    "sympy",
]

setuptools.setup(name = 'lagfib',
    description       = "Exact discriminant degrees and census bounds for Lagrangian fibrations.",
    packages = setuptools.find_packages(),
    package_data = {"lagfib" : testing_files},
    scripts = scripts,
    install_requires = requirements,
    extras_require = {"test": ["pytest"]},
    python_requires = ">=3.9",
    version=version,
)
