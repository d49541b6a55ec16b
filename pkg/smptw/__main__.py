import sys

from smptw.main import main

sys.exit(main())
