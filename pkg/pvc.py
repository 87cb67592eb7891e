#!/usr/bin/env python3
# d-PVC Kernelization Toolkit Entry Point

import sys
from dotenv import load_dotenv

# Carica le variabili ambiente dal file .env
load_dotenv()

from src.pvckernel.cli import main

if __name__ == '__main__':
    sys.exit(main())
