import sys

from asmdpp.cli import main

sys.exit(main())
