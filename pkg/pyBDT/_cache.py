"""
Validated parameters and dependency-tracked cached properties

A :class:`Cache` subclass declares its inputs with :func:`parameter`, whose
decorated function validates and normalizes the value being set, and its
derived data with :func:`cached_property`. Setting a parameter to a new
value drops every cached value derived from it, directly or through other
cached properties.
"""
from . import numpy
from .errors import InvalidDatum

import functools
import inspect
from six import add_metaclass

_UNSET = object()

def _same_value(new, old):
    """
    Whether a new parameter value equals the stored one; integer matrices
    are compared entrywise
    """
    if isinstance(new, numpy.ndarray) or isinstance(old, numpy.ndarray):
        a, b = numpy.asarray(new, dtype=object), numpy.asarray(old, dtype=object)
        return a.shape == b.shape and bool((a == b).all())
    try:
        return bool(new == old)
    except (TypeError, ValueError):
        return False


class ParameterProperty(object):
    """
    Descriptor of an input parameter; ``validate(obj, value)`` returns the
    normalized value or raises
    """
    def __init__(self, validate, default=_UNSET):
        self.validate = validate
        self.name = validate.__name__
        self.slot = '_param_' + self.name
        self.__doc__ = validate.__doc__
        if default is not _UNSET:
            self._default = default

    def __get__(self, obj, objtype=None):
        if obj is None:
            return self
        try:
            return obj.__dict__[self.slot]
        except KeyError:
            if hasattr(self, '_default'):
                return self.validate(obj, self._default)
            raise InvalidDatum("required parameter '%s' has not been set" %self.name)

    def __set__(self, obj, value):
        val = self.validate(obj, value)
        old = obj.__dict__.get(self.slot, _UNSET)
        if old is _UNSET or not _same_value(val, old):
            obj.__dict__[self.slot] = val
            obj._invalidate(self.name)

    def __delete__(self, obj):
        if obj.__dict__.pop(self.slot, _UNSET) is _UNSET:
            raise AttributeError("parameter '%s' is not set" %self.name)
        obj._invalidate(self.name)


class CachedProperty(object):
    """
    Descriptor of a value computed from ``parents``, stored until one of
    them changes
    """
    def __init__(self, compute, parents):
        self.compute = compute
        self.name = compute.__name__
        self.parents = tuple(parents)
        self.__doc__ = compute.__doc__

    def __get__(self, obj, objtype=None):
        if obj is None:
            return self
        cache = obj._cache
        if self.name not in cache:
            cache[self.name] = self.compute(obj)
        return cache[self.name]

    def __set__(self, obj, value):
        raise AttributeError("'%s' is derived from %s and cannot be set" %(self.name, list(self.parents)))

    def __delete__(self, obj):
        obj._cache.pop(self.name, None)
        obj._invalidate(self.name)


class CacheSchema(type):
    """
    Metaclass recording the parameters and cached properties of a class and
    its bases, and for each of them the cached properties derived from it
    """
    def __init__(cls, clsname, bases, attrs):
        super(CacheSchema, cls).__init__(clsname, bases, attrs)

        descriptors = {}
        for c in reversed(inspect.getmro(cls)):
            for name, value in c.__dict__.items():
                if isinstance(value, (ParameterProperty, CachedProperty)):
                    descriptors[name] = value
        cls._param_names = set(k for k, v in descriptors.items() if isinstance(v, ParameterProperty))
        cls._cached_names = set(descriptors) - cls._param_names

        children = dict((k, set()) for k in descriptors)
        for name in cls._cached_names:
            for parent in descriptors[name].parents:
                if parent not in descriptors:
                    raise ValueError("cached property '%s' of %s depends on '%s', which is neither "
                                     "a parameter nor a cached property" %(name, clsname, parent))
                children[parent].add(name)

        def descendants(name, seen):
            for child in children[name]:
                if child not in seen:
                    seen.add(child)
                    descendants(child, seen)
            return seen

        cls._dependents = dict((k, frozenset(descendants(k, set()))) for k in descriptors)


@add_metaclass(CacheSchema)
class Cache(object):
    """
    Base class of the objects holding configuration: validated parameters
    plus the cached data derived from them
    """
    def __new__(cls, *args, **kwargs):
        obj = super(Cache, cls).__new__(cls)
        obj._cache = {}
        return obj

    def _invalidate(self, name):
        for dep in self._dependents.get(name, ()):
            self._cache.pop(dep, None)

    def update(self, **kwargs):
        """
        Set several parameters at once
        """
        unknown = sorted(set(kwargs) - self._param_names)
        if unknown:
            raise InvalidDatum("%s has no parameter %s" %(self.__class__.__name__, ", ".join(unknown)))
        for k, v in kwargs.items():
            setattr(self, k, v)


def parameter(f=None, **kwargs):
    """
    Decorator for an input parameter, usable bare or as
    ``@parameter(default=...)``
    """
    if f is None:
        return functools.partial(parameter, **kwargs)
    return ParameterProperty(f, **kwargs)

def cached_property(*parents):
    """
    Decorator for a derived value that is computed once and recomputed
    after one of ``parents`` changes
    """
    def wrap(f):
        return CachedProperty(f, parents)
    return wrap
