from setuptools import find_packages, setup


f = open('README.rst', 'r')
LONG_DESCRIPTION = f.read()
f.close()

setup(
    name='asmdpp',
    version='1.0',
    description='Exact enumeration and identity checks for alternating '
                'sign matrices and descending plane partitions',
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/x-rst',
    license='MIT',
    install_requires=[
        'pydantic>=2.6.3',
        'sympy>=1.12'
    ],
    packages=find_packages(exclude=['ez_setup', 'tests*']),
    include_package_data=True,
    entry_points={
        'console_scripts': ['asmdpp=asmdpp.cli:main']
    }
)
