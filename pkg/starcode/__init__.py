__version__ = '0.1'

from .perm_core import *
from .group_algebra import *
from .star_graph import *
from .codes import *
from . import dlx
from . import search
from . import permfile
