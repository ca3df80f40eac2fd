import json

import pytest

from cli import main
from designs import gen_sqs8, scale, gen_sts
from hypergraph import format_hypergraph, parse


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content, encoding='utf-8')
        return str(path)
    return _write


@pytest.fixture
def sqs8_file(write):
    return write('sqs8.hg', format_hypergraph(gen_sqs8()))


class TestGen:
    def test_sts(self, capsys):
        assert main(['gen', 'sts', '7']) == 0
        out = capsys.readouterr().out
        assert out.startswith('# STS(7): n=7 m=7 K=[3]\n7\n0 1 3\n')
        assert parse(out).m == 7

    def test_sqs8(self, capsys):
        assert main(['gen', 'sqs8']) == 0
        assert parse(capsys.readouterr().out) == gen_sqs8()

    def test_scale(self, capsys, write):
        path = write('fano.hg', format_hypergraph(gen_sts(7)))
        assert main(['gen', 'scale', path, '3']) == 0
        assert parse(capsys.readouterr().out) == scale(gen_sts(7), 3)

    def test_random_is_seeded(self, capsys):
        assert main(['gen', 'random', '6', '5', '--sizes', '2', '3', '--seed', '11']) == 0
        first = capsys.readouterr().out
        main(['gen', 'random', '6', '5', '--sizes', '2', '3', '--seed', '11'])
        assert capsys.readouterr().out == first

    def test_bad_order(self, capsys):
        assert main(['gen', 'sts', '8']) == 2
        assert 'BAD_DESIGN_ORDER' in capsys.readouterr().err


class TestTourRoundTrip:
    def test_spanning_tour_verify_bicg_ucycle(self, capsys, write, sqs8_file):
        assert main(['tour', sqs8_file, '--spanning']) == 0
        tour_text = capsys.readouterr().out
        tokens = tour_text.split()
        assert len(tokens) == 28
        assert tour_text.count('\n') == 1
        tour_file = write('sqs8.tour', tour_text)

        assert main(['verify', sqs8_file, tour_file, '--spanning', '--tour']) == 0
        report = json.loads(capsys.readouterr().out)
        assert report['isSpanning'] and report['violations'] == []

        assert main(['bicg', sqs8_file, tour_file]) == 0
        cycle = [int(e) for e in capsys.readouterr().out.split()]
        assert sorted(cycle) == list(range(14))

        assert main(['ucycle', sqs8_file, tour_file]) == 0
        assert len(capsys.readouterr().out.split()) == 14

    def test_verify_rejects_bad_walk(self, capsys, write, sqs8_file):
        tour_file = write('bad.tour', '0 0 1 1\n')
        assert main(['verify', sqs8_file, tour_file]) == 1
        assert json.loads(capsys.readouterr().out)['violations']

    def test_bicg_needs_a_verified_tour(self, capsys, write, sqs8_file):
        tour_file = write('bad.tour', '0 0 1 1\n')
        assert main(['bicg', sqs8_file, tour_file]) == 1
        assert capsys.readouterr().out == ''

    def test_malformed_tour_file(self, write, sqs8_file):
        tour_file = write('bad.tour', '0 0 1\n')
        assert main(['verify', sqs8_file, tour_file]) == 2


class TestFileVerbs:
    def test_family_single_edge_is_negative(self, capsys, write):
        path = write('edge.hg', '3\n0 1 2\n')
        assert main(['family', path]) == 1
        assert capsys.readouterr().out == ''

    def test_family_two_edges(self, capsys, write):
        path = write('two.hg', '2\n0 1\n0 1\n')
        assert main(['family', path]) == 0
        assert capsys.readouterr().out == '0 0 1 1\n'

    def test_check_fano3(self, capsys, write):
        path = write('fano3.hg', format_hypergraph(scale(gen_sts(7), 3)))
        assert main(['check', path]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report['hypotheses']['delta2'] == 3
        assert report['hypotheses']['threshold'] == '7'
        assert report['hypotheses']['applies'] == ['i']

    def test_barrier(self, capsys, write):
        path = write('edge.hg', '3\n0 1 2\n')
        assert main(['barrier', path]) == 1
        assert json.loads(capsys.readouterr().out)['barrier']['T'] == [0]

    def test_barrier_cap(self, write, sqs8_file):
        assert main(['--cap', '10', 'barrier', sqs8_file]) == 2

    def test_oracle(self, capsys, write):
        path = write('fano.hg', format_hypergraph(gen_sts(7)))
        assert main(['oracle', path, '--mode', 'spanningTour']) == 0
        assert json.loads(capsys.readouterr().out)['spanningTourExists'] is True

    def test_several_files(self, capsys, write, sqs8_file):
        edge = write('edge.hg', '3\n0 1 2\n')
        assert main(['family', sqs8_file, edge]) == 1
        out = capsys.readouterr().out
        assert out.startswith(f"# {sqs8_file}\n")
        assert f"# {edge}\n" in out

    def test_missing_file(self, tmp_path):
        assert main(['family', str(tmp_path / 'absent.hg')]) == 2

    def test_parse_error(self, capsys, write):
        path = write('bad.hg', '3\n0 3\n')
        assert main(['check', path]) == 2
        assert 'line 2' in capsys.readouterr().err

    def test_unknown_verb(self):
        with pytest.raises(SystemExit) as info:
            main(['draw'])
        assert info.value.code == 2

    def test_parallel_jobs_keep_input_order(self, capsys, write, sqs8_file):
        two = write('two.hg', '2\n0 1\n0 1\n')
        edge = write('edge.hg', '3\n0 1 2\n')
        assert main(['--jobs', '2', 'family', two, edge, sqs8_file]) == 1
        out = capsys.readouterr().out
        assert out.index(two) < out.index(edge) < out.index(sqs8_file)
        assert f"# {two}\n0 0 1 1\n# {edge}\n# {sqs8_file}\n" in out


class TestUndecodableInput:
    def test_hypergraph_file(self, capsys, tmp_path):
        path = tmp_path / 'bad.hg'
        path.write_bytes(b'\xff\xfe')
        assert main(['family', str(path)]) == 2
        assert 'INVALID_INPUT' in capsys.readouterr().err

    def test_tour_file(self, capsys, tmp_path, sqs8_file):
        tour = tmp_path / 'bad.tour'
        tour.write_bytes(b'\xff\xfe')
        assert main(['verify', sqs8_file, str(tour)]) == 2
        assert 'INVALID_INPUT' in capsys.readouterr().err

    def test_scale_source(self, tmp_path):
        path = tmp_path / 'bad.hg'
        path.write_bytes(b'7\n\xff\xfe\n')
        assert main(['gen', 'scale', str(path), '2']) == 2
