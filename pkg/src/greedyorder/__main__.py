import sys

from greedyorder.cli import main

sys.exit(main())
