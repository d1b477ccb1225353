"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import sys
from pcollect.cli import main


sys.exit(main())
