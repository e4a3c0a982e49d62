import sys

from basenorm.cli import main

sys.exit(main())
