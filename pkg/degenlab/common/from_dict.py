import inspect
import logging

from future.utils import iteritems

KEYWORD_KINDS = {inspect.Parameter.POSITIONAL_OR_KEYWORD,
                 inspect.Parameter.KEYWORD_ONLY}

logger = logging.getLogger(__name__)


class FromDict(object):
    """Mixin building an object from a dict whose keys are the keyword
    arguments of ``__init__``

    Unknown keys are dropped with a warning so that configuration files
    written for another version still load.
    """

    @classmethod
    def from_dict(cls, obj_dict):
        if obj_dict is None:
            return cls()
        params = inspect.signature(cls.__init__).parameters

        if any(p.kind == inspect.Parameter.VAR_KEYWORD
               for p in params.values()):
            return cls(**obj_dict)

        param_names = set(
            name for i, (name, param) in enumerate(iteritems(params))
            if not (i == 0 and name == "self") and param.kind in KEYWORD_KINDS)
        ignored = sorted(k for k in obj_dict if k not in param_names)
        if ignored:
            logger.warning("Ignoring unknown %s parameters: %s",
                           cls.__name__, ", ".join(ignored))
        filtered_dict = {k: v for k, v in iteritems(obj_dict)
                         if k in param_names}
        return cls(**filtered_dict)
