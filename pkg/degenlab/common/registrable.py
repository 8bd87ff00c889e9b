# The registry pattern below follows the AllenNLP approach
# See github.com/allenai/allennlp/blob/master/allennlp/common/registrable.py

from collections import OrderedDict, defaultdict

from future.utils import iteritems

from degenlab.exceptions import AlreadyRegisteredError, NotRegisteredError


class Registrable(object):
    """Named registry of subclasses, one registry per base class

    Subclasses are added with the ``@Base.register(name)`` decorator and can
    then be looked up with ``Base.by_name(name)``. Registration order is kept,
    which is the order used when the check suites are run together.

    The module defining a base class must import all its registered
    subclasses, otherwise lookups made before the subclass module is loaded
    will fail.
    """
    _registry = defaultdict(OrderedDict)

    @classmethod
    def register(cls, name, override=False):
        """Decorator adding the decorated subclass to the registry of *cls*

        Args:
            name (str): identifier of the subclass
            override (bool, optional): replace a subclass previously
                registered under the same name instead of raising

        Raises:
            AlreadyRegisteredError: when *name* is already taken and
                *override* is False
        """
        registry = Registrable._registry[cls]

        def add_subclass_to_registry(subclass):
            if not override and name in registry:
                raise AlreadyRegisteredError(name, subclass, registry[name])
            registry[name] = subclass
            return subclass

        return add_subclass_to_registry

    @classmethod
    def registered_name(cls, registered_class):
        for name, subclass in iteritems(Registrable._registry[cls]):
            if subclass is registered_class:
                return name
        raise NotRegisteredError(cls, registered_cls=registered_class)

    @classmethod
    def by_name(cls, name):
        registry = Registrable._registry[cls]
        if name not in registry:
            raise NotRegisteredError(cls, name=name)
        return registry[name]

    @classmethod
    def list_available(cls):
        return list(Registrable._registry[cls])
