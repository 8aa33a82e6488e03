# Implementation registry for boundary decision procedures

_implementations = {}

def register_implementation(name, implementation_class):
    """Register a decision procedure with the given name."""
    _implementations[name] = implementation_class()

def get_implementation(name):
    """Get a registered decision procedure by name."""
    return _implementations.get(name)

def list_implementations():
    """List all registered decision procedures."""
    return list(_implementations.keys())

from implementations.theorem1 import Theorem1Decider
from implementations.theorem2 import Theorem2Decider
from implementations.conjectural import ConjecturalDecider

register_implementation('theorem1', Theorem1Decider)
register_implementation('theorem2', Theorem2Decider)
register_implementation('conjectural', ConjecturalDecider)
