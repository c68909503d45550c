"""Runner registry contract and command-line behaviour."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from twistkit.checks import (
    GROUPS,
    REGISTRY,
    RunConfig,
    SENTINEL_ERROR,
    report_document,
    report_json,
    run_checks,
)

EXPECTED_CHECK_IDS = (
    "clifford.euclidean_anticommutators",
    "clifford.minkowski_anticommutators",
    "clifford.sigma_pair_identities",
    "clifford.spin_boost_structure",
    "clifford.lorentz_extraction_routes",
    "axioms.order_zero",
    "axioms.twisted_first_order",
    "axioms.ko_signs",
    "axioms.rho_adjoint_involution",
    "axioms.grading_relations",
    "axioms.full_axiom_suite",
    "axioms.fluctuation_round_trip",
    "manifold.integration_by_parts",
    "manifold.multiply_algebra",
    "manifold.real_closure",
    "manifold.action_closed_form",
    "manifold.selfadjoint_edge_cases",
    "doubled.action_closed_form",
    "doubled.selfadjoint_fluctuations",
    "electrodynamics.finite_part_commutes",
    "electrodynamics.finite_space_structure",
    "electrodynamics.action_closed_form",
    "actions.graded_commutativity",
    "actions.pair_form_oracle",
    "actions.operator_composition",
    "actions.term_symmetry_split",
    "actions.printed_factor_conventions",
    "actions.twisted_pairing_antisymmetry",
    "gauge.potential_shift_laws",
    "gauge.adjoint_action",
    "gauge.action_phase_absorption",
    "boost.action_invariance",
    "boost.manifold_closed_form",
    "boost.doubled_closed_form",
    "boost.electro_closed_form",
    "dynamics.determinant_kernel_duality",
    "dynamics.dispersion_surfaces",
    "dynamics.kernel_boost_covariance",
    "dynamics.euler_lagrange_consistency",
    "dynamics.boosted_reduction",
)


def run_cli(*argv, env_extra=None):
    env = {k: v for k, v in os.environ.items() if k != "TWISTKIT_SEED"}
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "twistkit", *argv],
        capture_output=True,
        text=True,
        env=env,
    )


class TestRegistry:
    def test_frozen_id_list(self):
        assert tuple(s.check_id for s in REGISTRY) == EXPECTED_CHECK_IDS

    def test_ids_unique_and_grouped(self):
        ids = [s.check_id for s in REGISTRY]
        assert len(set(ids)) == len(ids) == 40
        for spec in REGISTRY:
            group, _, name = spec.check_id.partition(".")
            assert group == spec.group
            assert group in GROUPS
            assert name

    def test_every_group_represented(self):
        present = {s.group for s in REGISTRY}
        assert present == set(GROUPS)

    def test_tolerances_positive(self):
        assert all(s.tolerance > 0 for s in REGISTRY)

    def test_paper_refs_filled(self):
        assert all(s.paper_ref.strip() for s in REGISTRY)


class TestRunner:
    def test_clifford_group_all_pass(self):
        records = run_checks(RunConfig(groups=("clifford",)))
        assert len(records) == 5
        assert all(r.status == "pass" for r in records)
        assert all(r.max_abs_error <= r.tolerance for r in records)

    def test_records_sorted_and_seed_echoed(self):
        records = run_checks(RunConfig(seed=11, groups=("gauge",)))
        ids = [r.check_id for r in records]
        assert ids == sorted(ids)
        assert all(r.seed == 11 for r in records)

    def test_group_filter_preserves_streams(self):
        """Filtering must not shift any check's random draws."""
        full = {r.check_id: r.max_abs_error for r in run_checks(RunConfig(seed=4))}
        part = run_checks(RunConfig(seed=4, groups=("dynamics",)))
        for rec in part:
            assert rec.max_abs_error == full[rec.check_id]

    def test_zero_rapidity_skips_boost_draws(self):
        records = run_checks(RunConfig(rapidity_max=0.0))
        by_status = {r.check_id: r.status for r in records}
        assert by_status["boost.action_invariance"] == "skip"
        assert by_status["clifford.spin_boost_structure"] == "skip"
        assert by_status["dynamics.kernel_boost_covariance"] == "skip"
        # the duality sweep still runs on the unboosted families
        assert by_status["dynamics.determinant_kernel_duality"] == "pass"
        skips = [r for r in records if r.status == "skip"]
        assert len(skips) == 8
        assert all(r.max_abs_error == SENTINEL_ERROR for r in skips)
        assert not any(r.status == "fail" for r in records)

    def test_pass_iff_error_within_tolerance(self):
        for rec in run_checks(RunConfig(groups=("manifold", "actions"))):
            assert (rec.status == "pass") == (rec.max_abs_error <= rec.tolerance)

    def test_tolerance_override_applies(self):
        cfg = RunConfig(groups=("clifford",), tolerances={"clifford": 0.5})
        assert all(r.tolerance == 0.5 for r in run_checks(cfg))

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"mode_cutoff": 0},
            {"probe_cutoff": 0},
            {"rapidity_max": -1.0},
            {"groups": ("clifford", "nope")},
            {"tolerances": {"nope": 1e-9}},
            {"tolerances": {"boost": 0.0}},
        ],
    )
    def test_config_validation(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)


class TestReport:
    def test_json_byte_identical(self):
        cfg_a = RunConfig(seed=2, groups=("clifford", "gauge"))
        cfg_b = RunConfig(seed=2, groups=("clifford", "gauge"))
        assert report_json(cfg_a, run_checks(cfg_a)) == report_json(
            cfg_b, run_checks(cfg_b)
        )

    def test_document_zeroes_elapsed_and_sorts(self):
        cfg = RunConfig(groups=("dynamics",))
        records = run_checks(cfg)
        assert any(r.elapsed_ms > 0 for r in records)  # real timing in memory
        doc = report_document(cfg, records)
        assert all(c["elapsed_ms"] == 0.0 for c in doc["checks"])
        ids = [c["check_id"] for c in doc["checks"]]
        assert ids == sorted(ids)
        assert doc["config"]["seed"] == 0
        # strict JSON: no inf/nan anywhere
        json.dumps(doc, allow_nan=False)

    def test_record_fields(self):
        (rec,) = run_checks(RunConfig(groups=("electrodynamics",)))[:1]
        doc = report_document(RunConfig(), [rec])
        assert sorted(doc["checks"][0]) == [
            "check_id",
            "elapsed_ms",
            "max_abs_error",
            "paper_ref",
            "seed",
            "status",
            "tolerance",
        ]


class TestVerifyCommand:
    def test_unknown_group_usage_error(self):
        proc = run_cli("verify", "--groups", "foo")
        assert proc.returncode == 2
        assert "unknown check groups" in proc.stderr

    def test_group_run_exits_zero(self, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("verify", "--groups", "clifford", "--json", str(out))
        assert proc.returncode == 0
        assert "5 checks: 5 passed, 0 failed, 0 skipped" in proc.stdout
        doc = json.loads(out.read_text())
        assert len(doc["checks"]) == 5

    def test_json_reports_byte_identical_across_runs(self, tmp_path):
        out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
        argv = ("verify", "--groups", "gauge", "--seed", "6")
        assert run_cli(*argv, "--json", str(out1)).returncode == 0
        assert run_cli(*argv, "--json", str(out2)).returncode == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_seed_precedence_flag_over_env(self):
        proc = run_cli(
            "verify", "--groups", "clifford", "--seed", "5",
            env_extra={"TWISTKIT_SEED": "77"},
        )
        assert "seed=5" in proc.stdout.splitlines()[0]

    def test_seed_from_environment(self):
        proc = run_cli(
            "verify", "--groups", "clifford", env_extra={"TWISTKIT_SEED": "77"}
        )
        assert "seed=77" in proc.stdout.splitlines()[0]

    def test_config_file_layer(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "seed = 9\ngroups = clifford\ntolerance.clifford = 1e-10\n# note\n"
        )
        proc = run_cli("verify", "--config", str(cfg))
        assert proc.returncode == 0
        head = proc.stdout.splitlines()[0]
        assert "seed=9" in head and "groups=clifford" in head

    def test_bad_config_key_usage_error(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("volume = 11\n")
        proc = run_cli("verify", "--config", str(cfg))
        assert proc.returncode == 2
        assert "unknown config key" in proc.stderr


class TestActionCommand:
    def test_zero_input_zero_action(self, tmp_path):
        data = tmp_path / "zero.json"
        data.write_text('{"fields": [[], []]}')
        proc = run_cli("action", "--weyl-file", str(data))
        assert proc.returncode == 0
        assert "action: 0" in proc.stdout
        assert "comparison error: 0.000e+00" in proc.stdout

    def test_seeded_manifold_within_tolerance(self):
        proc = run_cli("action", "--geometry", "manifold", "--seed", "5")
        assert proc.returncode == 0
        assert "degree-two coefficients" in proc.stdout
        error = float(proc.stdout.rsplit("comparison error:", 1)[1])
        assert error <= 1e-10

    def test_electro_four_term_decomposition(self):
        proc = run_cli("action", "--geometry", "electro", "--d", "1j", "--seed", "3")
        assert proc.returncode == 0
        for name in ("derivative", "chiral", "vector", "mass"):
            assert name in proc.stdout
        residual = float(
            proc.stdout.rsplit("piece-sum residual:", 1)[1].split()[0]
        )
        assert residual <= 1e-10

    def test_explicit_weyl_file(self, tmp_path):
        data = tmp_path / "pair.json"
        data.write_text(
            json.dumps(
                {
                    "fields": [
                        [{"mode": [0, 0, 0, 1], "amplitude": [[1.0, 0.0], [0.5, -0.5]]}],
                        [{"mode": [0, 0, 0, -1], "amplitude": [[0.0, 1.0], [1.0, 0.0]]}],
                    ],
                    "f": [[{"mode": [0, 0, 0, 0], "value": [0.7, 0.0]}], [], [], []],
                }
            )
        )
        proc = run_cli("action", "--weyl-file", str(data))
        assert proc.returncode == 0
        assert "generators: 4" in proc.stdout

    def test_malformed_file_usage_error(self, tmp_path):
        data = tmp_path / "broken.json"
        data.write_text('{"fields": [[{"mode": [0,0,0]}], []]}')
        proc = run_cli("action", "--weyl-file", str(data))
        assert proc.returncode == 2

    def test_wrong_field_count_usage_error(self, tmp_path):
        data = tmp_path / "short.json"
        data.write_text('{"fields": [[]]}')
        proc = run_cli("action", "--geometry", "electro", "--weyl-file", str(data))
        assert proc.returncode == 2
        assert "exactly 4" in proc.stderr


class TestDispersionCommand:
    def test_weyl_left_contract_example(self):
        proc = run_cli(
            "dispersion", "--kind", "weyl-left", "--f0", "1", "--p", "0,0,0,1"
        )
        assert proc.returncode == 0
        assert "determinant: +0+0j" in proc.stdout
        assert "-1+0j" in proc.stdout  # the admissible p0 = -1 root
        kernel_line = proc.stdout.strip().splitlines()[-1]
        a, b = [complex(part) for part in
                kernel_line.strip(" []").replace("j,", "j|").split("|")]
        assert abs(a) < 1e-12 and abs(abs(b) - 1.0) < 1e-12

    def test_rest_frame_massive_roots(self):
        proc = run_cli("dispersion", "--kind", "dirac", "--d", "1j", "--p", "0,0,0,0")
        assert proc.returncode == 0
        assert "+1+0j" in proc.stdout and "-1-0j" in proc.stdout

    def test_boosted_identity_matches_flat(self):
        flat = run_cli(
            "dispersion", "--kind", "weyl-left", "--f0", "1", "--p", "0,0,0,1"
        )
        boosted = run_cli(
            "dispersion", "--kind", "boosted-weyl", "--f0", "1", "--p", "0,0,0,1"
        )
        flat_body = flat.stdout.split("\n", 1)[1]
        boosted_body = boosted.stdout.split("\n", 1)[1]
        assert flat_body == boosted_body

    def test_malformed_vector_usage_error(self):
        proc = run_cli("dispersion", "--kind", "weyl-left", "--p", "1,2")
        assert proc.returncode == 2

    def test_unknown_kind_usage_error(self):
        proc = run_cli("dispersion", "--kind", "tachyon")
        assert proc.returncode == 2
