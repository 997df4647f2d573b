import sys

from majdes.cli import main

sys.exit(main())
