from .mixins.helpers import HelpersMixin
from .mixins.report import ReportMixin
from .mixins.commands import CommandsMixin
from .mixins.verify import VerifyMixin
from .base import Base


class LapMult(
    HelpersMixin,
    ReportMixin,
    CommandsMixin,
    VerifyMixin,
    Base,
):
    pass
