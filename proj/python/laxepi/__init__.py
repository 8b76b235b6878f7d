"""Exact deciders for epimorphisms of finite linear categories.

Instances are JSON documents (or "builtin:<name>"); every report comes back
as a dict with "verdict", "witnesses" and "instance_hash".
"""

import json

from . import _core
from ._core import LaxepiError, builtin, builtin_names, check_kinds, instance_hash, random_instance

__all__ = [
    "LaxepiError",
    "builtin",
    "builtin_names",
    "check",
    "check_kinds",
    "corpus_run",
    "error_code",
    "factor",
    "hom",
    "instance_hash",
    "localize",
    "random_instance",
    "validate",
]


def _source(instance):
    # Accept dicts as well as JSON text.
    if isinstance(instance, dict):
        return json.dumps(instance)
    return instance


def error_code(exc):
    """The E_* code carried by a LaxepiError."""
    return exc.args[0]


def validate(instance):
    return json.loads(_core.validate(_source(instance)))


def factor(instance, functor, ideal=None):
    return json.loads(_core.factor(_source(instance), functor, ideal))


def check(instance, subject, kind, ideal=None):
    return json.loads(_core.check(_source(instance), subject, kind, ideal))


def localize(instance, module, ideal):
    return json.loads(_core.localize(_source(instance), module, ideal))


def hom(instance, source, target, ideal=None):
    return json.loads(_core.hom(_source(instance), source, target, ideal))


def corpus_run(seed=0, count=50):
    return json.loads(_core.corpus_run(seed, count))
