from setuptools import setup, find_packages

setup(
    name="flashmove",
    version="1.0.0",
    packages=find_packages(exclude=["examples", "examples.*"]),
    package_data={"flashmove.instance_model": ["data/*.json"]},
    install_requires=[
        "click>=8.1.0",
        "numpy>=1.24.0",
        "python-dotenv>=1.0.0",
    ],
    entry_points={
        "console_scripts": [
            "flashmove=flashmove.cli:cli",
        ],
    },
    python_requires=">=3.9",
)
