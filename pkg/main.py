"""
flashmove
Main command-line entry point
"""
from dotenv import load_dotenv

from flashmove.cli import cli

# Load environment variables
load_dotenv()

if __name__ == '__main__':
    cli(prog_name='flashmove')
