import json
import os
import tempfile
import threading
from pathlib import Path
from typing import Optional, Union

from asmdpp import CACHE_ENV_VAR, CACHE_FORMAT_VERSION, logger
from asmdpp.genfun import GenFun, ObjectKind, genfun_bruteforce
from asmdpp.utils import DEFAULT_CAPS, AsmDppError, Caps, canonical_json


def default_cache_dir() -> Path:
    """
    Resolves the cache directory: ``$REFINE_CACHE_DIR`` if set, else
    ``$XDG_CACHE_HOME/asmdpp``, else ``~/.cache/asmdpp``.
    """
    explicit = os.environ.get(CACHE_ENV_VAR)
    if explicit:
        return Path(explicit)
    xdg = os.environ.get('XDG_CACHE_HOME')
    if xdg:
        return Path(xdg) / 'asmdpp'
    return Path.home() / '.cache' / 'asmdpp'


class GenFunCache:
    """
    An on-disk store of generating functions keyed by (kind, n, format
    version). Entries are written once, through a temporary file that is
    renamed into place, so a reader never sees a partial file; writes from
    threads of one process are serialized by a lock.

    :param directory: where to keep the files, :func:`default_cache_dir`
        when omitted
    """
    def __init__(self, directory: Optional[Union[str, Path]] = None):
        self.directory = Path(directory) if directory else default_cache_dir()
        self._lock = threading.Lock()

    def path_for(self, kind: Union[ObjectKind, str], n: int) -> Path:
        kind = ObjectKind(kind)
        name = f'{kind.value.lower()}-{n}-v{CACHE_FORMAT_VERSION}.json'
        return self.directory / name

    def load(
        self,
        kind: Union[ObjectKind, str],
        n: int
    ) -> Optional[GenFun]:
        """
        Reads a cached generating function. Missing, unreadable or
        mismatching entries count as misses.

        :param kind: ASM or DPP
        :param n: the order

        :return: the stored value, or None
        """
        kind = ObjectKind(kind)
        path = self.path_for(kind, n)
        try:
            data = json.loads(path.read_text())
            genfun = GenFun.from_json(data)
        except FileNotFoundError:
            logger.debug('cache miss for %s n=%s', kind.value, n)
            return None
        except (OSError, ValueError, KeyError, TypeError, AsmDppError) as e:
            logger.debug('ignoring unreadable cache entry %s: %s', path, e)
            return None
        if genfun.kind != kind or genfun.n != n:
            logger.debug('cache entry %s has header %s/%s', path,
                         genfun.kind.value, genfun.n)
            return None
        logger.debug('cache hit for %s n=%s', kind.value, n)
        return genfun

    def store(self, genfun: GenFun) -> Path:
        """
        Writes an entry unless a readable one already exists.

        :param genfun: the value to store

        :return: the path of the entry
        """
        path = self.path_for(genfun.kind, genfun.n)
        with self._lock:
            if path.exists() and \
                    self.load(genfun.kind, genfun.n) is not None:
                return path
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, temporary = tempfile.mkstemp(
                dir=self.directory, prefix='.', suffix='.tmp'
            )
            try:
                with os.fdopen(fd, 'w') as f:
                    f.write(canonical_json(genfun.to_json()))
                os.replace(temporary, path)
            except BaseException:
                if os.path.exists(temporary):
                    os.unlink(temporary)
                raise
        logger.debug('cached %s n=%s in %s', genfun.kind.value, genfun.n,
                     path)
        return path

    def get_or_compute(
        self,
        kind: Union[ObjectKind, str],
        n: int,
        caps: Caps = DEFAULT_CAPS
    ) -> GenFun:
        """
        Returns the cached generating function, computing and storing it by
        enumeration on a miss. A cache that cannot be written only costs
        the write.
        """
        cached = self.load(kind, n)
        if cached is not None:
            return cached
        genfun = genfun_bruteforce(kind, n, caps)
        try:
            self.store(genfun)
        except OSError as e:
            logger.debug('could not write cache entry: %s', e)
        return genfun
