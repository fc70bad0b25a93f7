import json

from asmdpp.cache import GenFunCache, default_cache_dir
from asmdpp.genfun import ObjectKind, genfun_bruteforce


def test_default_dir(cache_dir, monkeypatch, tmp_path):
    assert default_cache_dir() == cache_dir
    monkeypatch.delenv('REFINE_CACHE_DIR')
    monkeypatch.setenv('XDG_CACHE_HOME', str(tmp_path / 'xdg'))
    assert default_cache_dir() == tmp_path / 'xdg' / 'asmdpp'


def test_miss_then_hit(cache_dir, z3):
    cache = GenFunCache()
    assert cache.directory == cache_dir
    assert cache.load('ASM', 3) is None
    computed = cache.get_or_compute('ASM', 3)
    assert computed.poly == z3
    path = cache.path_for(ObjectKind.ASM, 3)
    assert path.name == 'asm-3-v1.json'
    assert path.exists()
    assert cache.load('ASM', 3).poly == z3
    assert cache.load('DPP', 3) is None


def test_store_is_write_once(tmp_path):
    cache = GenFunCache(tmp_path)
    path = cache.store(genfun_bruteforce('DPP', 2))
    first = path.read_bytes()
    assert cache.store(genfun_bruteforce('DPP', 2)) == path
    assert path.read_bytes() == first
    assert not list(tmp_path.glob('*.tmp'))


def test_corrupt_entry_is_replaced(tmp_path, z3):
    cache = GenFunCache(tmp_path)
    path = cache.path_for('DPP', 3)
    path.write_text('{"kind": "DPP", "n": ')
    assert cache.load('DPP', 3) is None
    assert cache.get_or_compute('DPP', 3).poly == z3
    assert json.loads(path.read_text())['kind'] == 'DPP'


def test_mismatched_header_is_a_miss(tmp_path):
    cache = GenFunCache(tmp_path)
    data = genfun_bruteforce('ASM', 2).to_json()
    cache.path_for('ASM', 3).write_text(json.dumps(data))
    assert cache.load('ASM', 3) is None
