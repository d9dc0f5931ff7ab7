from coverdepth.log import *            # noqa
from coverdepth.utility import *        # noqa
from coverdepth.numeric import *        # noqa
from coverdepth.gf import *             # noqa
from coverdepth.linalg import *         # noqa
from coverdepth.codes import *          # noqa
from coverdepth.census import *         # noqa
from coverdepth.enumeration import *    # noqa
from coverdepth.golay import *          # noqa
from coverdepth.coverage import *       # noqa
from coverdepth.simulation import *     # noqa
from coverdepth.verification import *   # noqa
from coverdepth.parallel import *       # noqa

__version__ = '0.1'
