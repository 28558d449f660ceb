from setuptools import setup, find_packages

setup(
    name="maserengine",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=2.0.0",
        "scipy>=1.13.0",
        "pydantic>=2.0.0",
        "PyYAML>=6.0.1",
        "click>=8.1.7",
        "rich>=13.7.0",
    ],
    entry_points={
        "console_scripts": [
            "maserengine=maserengine.cli.main:main",
        ],
    },
    python_requires=">=3.10",
    description="Three-level maser heat engine simulator with ergotropy and free-energy analytics",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
        "Development Status :: 3 - Alpha",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
