from cubicbundle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_csv_shape(self, tmp_path, capsys):
        out = tmp_path / "counts.csv"
        code, stdout, _ = run(capsys, "count", "--bounds", "1,2,4,8", "--out", str(out))
        assert code == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "B,ALL,IN_Z,NOT_IN_Z,IN_SOME_V,LIFTABLE_ONLY,SINGULAR_FIBER"
        assert len(lines) == 5
        assert lines[1].startswith("1,440,")
        assert "ALL" in stdout  # summary table printed

    def test_byte_identical_across_workers(self, tmp_path, capsys):
        blobs = []
        for workers in (1, 2, 4):
            out = tmp_path / f"counts_{workers}.csv"
            code, _, _ = run(
                capsys, "count", "--bounds", "1,2,4,8", "--out", str(out),
                "--workers", str(workers),
            )
            assert code == 0
            blobs.append(out.read_bytes())
        assert blobs[0] == blobs[1] == blobs[2]

    def test_emit_points(self, tmp_path, capsys):
        out = tmp_path / "counts.csv"
        code, _, _ = run(capsys, "count", "--bounds", "1", "--out", str(out), "--emit-points")
        assert code == 0
        rows = (tmp_path / "counts.csv.points").read_text().strip().split("\n")
        assert len(rows) == 440
        assert all(len(r.split("|")) == 4 for r in rows)

    def test_invalid_bounds_usage_error(self, tmp_path, capsys):
        code, _, err = run(capsys, "count", "--bounds", "4,2", "--out", str(tmp_path / "x.csv"))
        assert code == 64
        code, _, err = run(capsys, "count", "--bounds", "abc", "--out", str(tmp_path / "x.csv"))
        assert code == 64

    def test_unwritable_output(self, capsys):
        code, _, err = run(capsys, "count", "--bounds", "1", "--out", "/nonexistent-dir/x.csv")
        assert code == 2


class TestEnumerate:
    def test_dump_format(self, tmp_path, capsys):
        out = tmp_path / "points.txt"
        code, _, _ = run(capsys, "enumerate", "--bound", "1", "--out", str(out))
        assert code == 0
        rows = out.read_text().strip().split("\n")
        assert len(rows) == 440
        x_part, y_part, height, flags = rows[0].split("|")
        assert len(x_part.split(":")) == 4
        assert len(y_part.split(":")) == 4
        assert height == "1"
        assert flags


class TestClassify:
    def test_pair_locus_point(self, capsys):
        code, stdout, _ = run(capsys, "classify", "1:1:1:1", "1:-1:1:-1")
        assert code == 0
        assert "in_V1: true" in stdout
        assert "in_Z: true" in stdout
        assert "fiber_rank: 4" in stdout

    def test_not_on_bundle(self, capsys):
        code, _, err = run(capsys, "classify", "1:1:1:1", "1:1:1:1")
        assert code == 65
        assert "not on the bundle" in err

    def test_singular_fiber(self, capsys):
        code, stdout, _ = run(capsys, "classify", "0:1:1:1", "9:1:-1:0")
        assert code == 0
        assert "singular_fiber: true" in stdout
        assert "fiber_rank: -" in stdout

    def test_malformed_point(self, capsys):
        code, _, err = run(capsys, "classify", "1:1:1", "1:-1:1:-1")
        assert code == 65


class TestFiberRank:
    def test_generic_rank_one(self, capsys):
        code, stdout, _ = run(capsys, "fiber-rank", "1", "2", "3", "5")
        assert code == 0
        assert "rank_over_Q: 1" in stdout
        assert "segre_rank_one: true" in stdout
        assert "agreement: true" in stdout

    def test_fermat_rank_four(self, capsys):
        code, stdout, _ = run(capsys, "fiber-rank", "1", "1", "1", "1")
        assert code == 0
        assert "rank_over_Q: 4" in stdout

    def test_zero_coefficient_domain_error(self, capsys):
        code, _, err = run(capsys, "fiber-rank", "1", "0", "1", "1")
        assert code == 65


class TestLines:
    def test_row_sums_and_orbits(self, capsys):
        code, stdout, _ = run(capsys, "lines", "1", "1", "1", "1")
        assert code == 0
        line_rows = [l for l in stdout.splitlines() if l.startswith("line ")]
        assert len(line_rows) == 27
        assert all(row.endswith("meets 10") for row in line_rows)
        sizes_row = next(l for l in stdout.splitlines() if l.startswith("orbit_sizes"))
        sizes = eval(sizes_row.split(": ")[1])
        assert sum(sizes) == 27


class TestVerifyIntersections:
    def test_all_pass(self, capsys):
        code, stdout, _ = run(capsys, "verify-intersections")
        assert code == 0
        assert stdout.count("PASS") == 3
        assert "FAIL" not in stdout

    def test_seed_changes_nothing(self, capsys):
        code, stdout, _ = run(capsys, "verify-intersections", "--seed", "99")
        assert code == 0
        assert stdout.count("PASS") == 3


class TestRankSurvey:
    def test_deterministic_given_seed(self, capsys):
        code1, out1, _ = run(capsys, "rank-survey", "--samples", "25", "--seed", "7")
        code2, out2, _ = run(capsys, "rank-survey", "--samples", "25", "--seed", "7")
        assert code1 == code2 == 0
        assert out1 == out2
        assert "segre_disagreements: 0" in out1

    def test_rank_lines_present(self, capsys):
        _, stdout, _ = run(capsys, "rank-survey", "--samples", "10", "--seed", "3")
        assert any(line.startswith("rank 1:") for line in stdout.splitlines())


class TestPlot:
    def test_round_trip(self, tmp_path, capsys):
        csv = tmp_path / "counts.csv"
        svg = tmp_path / "counts.svg"
        code, _, _ = run(capsys, "count", "--bounds", "1,2,4", "--out", str(csv))
        assert code == 0
        code, _, _ = run(capsys, "plot", str(csv), str(svg))
        assert code == 0
        body = svg.read_text()
        assert body.startswith("<svg")
        assert body.rstrip().endswith("</svg>")
        assert "polyline" in body
        assert "IN_Z" in body

    def test_missing_csv(self, tmp_path, capsys):
        code, _, err = run(capsys, "plot", str(tmp_path / "absent.csv"), str(tmp_path / "x.svg"))
        assert code == 66

    def test_empty_body(self, tmp_path, capsys):
        csv = tmp_path / "empty.csv"
        csv.write_text("B,ALL\n")
        code, _, err = run(capsys, "plot", str(csv), str(tmp_path / "x.svg"))
        assert code == 65
        assert "no rows" in err
