"""On-disk storage for derived J-polynomial caches and packaged data.

Derived artifacts (syzygy blocks, conic/quartic coefficient polynomials)
are expensive to recompute, so they are written as line-oriented text files
keyed by a content hash of (catalogue version, artifact identifier).  Reads
consult the user cache directory first, then the data files shipped with
the package.  A stale or tampered file fails the hash check and is treated
as absent (or raises, for the packaged copies).
"""

import hashlib
import os

from .errors import CacheCorrupt
from .jpoly import JPolynomial

CATALOGUE_VERSION = "octic-catalogue-2"

_ENV_VAR = "OCTICMODULI_CACHE"
_override_dir = None


def set_cache_dir(path):
    """Process-wide override used by the command line front end."""
    global _override_dir
    _override_dir = path


def cache_dir():
    if _override_dir:
        return _override_dir
    env = os.environ.get(_ENV_VAR)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "octicmoduli")


def data_dir():
    return os.path.join(os.path.dirname(__file__), "data")


def content_key(identifier):
    h = hashlib.sha256()
    h.update(CATALOGUE_VERSION.encode())
    h.update(b"\0")
    h.update(identifier.encode())
    return h.hexdigest()[:16]


def artifact_filename(identifier):
    safe = identifier.replace(",", "_").replace("(", "").replace(")", "")
    return "%s-%s.jpoly" % (safe, content_key(identifier))


def write_artifact(identifier, named_polys, directory=None):
    """named_polys: list of (name, JPolynomial). Returns the path."""
    directory = directory or cache_dir()
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, artifact_filename(identifier))
    lines = ["# octicmoduli %s %s" % (content_key(identifier), identifier)]
    for name, poly in named_polys:
        lines.append("%s | %s" % (name, poly.serialize()))
    body = "\n".join(lines) + "\n"
    tmp = path + ".tmp.%d" % os.getpid()
    with open(tmp, "w") as fh:
        fh.write(body)
    os.replace(tmp, path)
    return path


def read_artifact(identifier):
    """Returns list of (name, JPolynomial) or None when absent."""
    fname = artifact_filename(identifier)
    for directory in (cache_dir(), data_dir()):
        path = os.path.join(directory, fname)
        if not os.path.exists(path):
            continue
        with open(path) as fh:
            lines = fh.read().splitlines()
        if not lines or not lines[0].startswith("# octicmoduli "):
            raise CacheCorrupt("missing header in %s" % path)
        try:
            header_key = lines[0].split()[2]
        except IndexError:
            raise CacheCorrupt("malformed header in %s" % path)
        if header_key != content_key(identifier):
            raise CacheCorrupt("hash mismatch in %s" % path)
        out = []
        for line in lines[1:]:
            if not line.strip() or line.startswith("#"):
                continue
            name, _, payload = line.partition(" | ")
            out.append((name.strip(), JPolynomial.deserialize(payload)))
        return out
    return None


def read_data_polys(basename):
    """Read a packaged data file of named J-polynomials (no hash key)."""
    path = os.path.join(data_dir(), basename)
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, _, payload = line.partition(" | ")
            out.append((name.strip(), JPolynomial.deserialize(payload)))
    return out
