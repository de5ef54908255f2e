#!/usr/bin/env python
import sys

from cratlas.cli import main

sys.exit(main())
