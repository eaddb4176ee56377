#!/usr/bin/env python
from prolim.src.main import cli

if __name__ == "__main__":
   cli()
