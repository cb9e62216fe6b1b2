#! /usr/bin/env python
import setuptools # necessary for install_requires
from setuptools import find_packages

descr = """pyBDT

pyBDT is a Python package for exact computations with Brylinski-Deligne
covering groups of tori over p-adic fields: the lattice invariants of a
datum, the center of the cover, its genuine spherical Hecke algebra and its
genuine irreducible representations on finite quotients.
"""

DISTNAME         = 'pyBDT'
DESCRIPTION      = 'Exact computations with Brylinski-Deligne covers of tori in Python'
LONG_DESCRIPTION = descr
LICENSE          = 'GPL3'

def find_version(path):
    import re
    # path shall be a plain ascii text file.
    s = open(path, 'rt').read()
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]",
                              s, re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError("Version not found")

# the dependencies
with open('requirements.txt', 'r') as fh:
    dependencies = [l.strip() for l in fh if l.strip()]

# extra dependencies
extras = {}
with open('requirements-tests.txt', 'r') as fh:
    extras['tests'] = [l.strip() for l in fh if l.strip()]
    extras['test'] = extras['tests']

if __name__ == '__main__':

    from setuptools import setup
    setup(name=DISTNAME,
          version=find_version("pyBDT/version.py"),
          description=DESCRIPTION,
          long_description=LONG_DESCRIPTION,
          license=LICENSE,
          zip_safe=False,
          packages=find_packages(exclude=['examples', 'examples.*']),
          install_requires=dependencies,
          extras_require=extras,
          entry_points={'console_scripts' :
                      ['bdt = pyBDT.bdt.bdt:main']}
    )
