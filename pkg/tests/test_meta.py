# built in modules
import io

# installed modules
import pytest

# project modules
from bilch.core import UnionFind, gf2_sum, parity, toggle
from bilch.meta import (Printer, StatusPrinter, error_wrapper_pool,
                        time_formatter, timer)
from bilch.multiprocessing import pool_map


def add(x, y=0):
    return x + y


def fail(x):
    raise KeyError('bad job {}'.format(x))


def test_printer():
    out = io.StringIO()
    printer = Printer(tag='bilch', on=False, output=out)
    printer('hidden')
    printer.on = True
    printer('two\nlines')
    printer.clone(tag='timer')('cloned')
    printer.clone(on=False)('silent')
    assert out.getvalue().splitlines() == [
        '[bilch] two', '[bilch] lines', '[timer] cloned']


def test_errors_always_print():
    out = io.StringIO()
    printer = Printer(on=False, output=out)
    printer.error('DgaError: line 1')
    printer.warn('careful')
    lines = out.getvalue().splitlines()
    assert len(lines) == 2
    assert '[error]' in lines[0] and lines[0].endswith('DgaError: line 1')
    assert '[warning]' in lines[1]


def test_status_printer():
    out = io.StringIO()
    status = StatusPrinter(Printer(on=True, output=out), print_every=2,
                           comment='augmentations', total_cnt=4)
    for _ in range(4):
        status.increase()
    lines = out.getvalue().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith('[bilch] augmentations: 50.00% (2) processed')
    assert lines[1].startswith('[bilch] augmentations: 100.00% (4) processed')


def test_timer():
    out = io.StringIO()
    timed = timer(add, printer=Printer(on=True, output=out), comment='sum')
    assert timed.__name__ == 'add'
    assert timed(1, 2) == 3
    assert out.getvalue().startswith('[timer] sum : ')
    assert isinstance(timer(), float)


@pytest.mark.parametrize('seconds, text', [
    (0.5, '0.500 s'), (61, '01:01.00'), (3661, '01:01:01.00')])
def test_time_formatter(seconds, text):
    assert time_formatter(seconds) == text


def test_error_wrapper_keeps_the_type():
    with pytest.raises(KeyError, match='Traceback'):
        error_wrapper_pool(fail)(3)


@pytest.mark.parametrize('workers', [1, 2])
def test_pool_map_order(workers):
    jobs = [(i, 10 * i) for i in range(6)]
    assert pool_map(add, jobs, workers=workers) == [11 * i for i in range(6)]


def test_pool_map_single_argument_and_empty():
    assert pool_map(add, [(1, ), (1, 2)]) == [1, 3]
    assert pool_map(add, [], workers=4) == []


def test_pool_map_in_process_errors_are_untouched():
    with pytest.raises(KeyError) as info:
        pool_map(fail, [(1, )])
    assert info.value.args == ('bad job 1', )


def test_gf2_helpers():
    assert parity(-3) == 1 and parity(4) == 0
    assert toggle({1, 2}, 2) == {1}
    assert gf2_sum([(0, 1), (), (0, 1), (2, )]) == {(), (2, )}


def test_union_find():
    uf = UnionFind(6)
    uf.union(4, 1)
    uf.union(5, 4)
    uf.union(2, 3)
    assert uf.find(5) == 1
    assert uf.get_clusters() == [[0], [1, 4, 5], [2, 3]]
