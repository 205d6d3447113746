"""Acceptance criteria, one test per criterion; each records a PASS/FAIL line."""

import random
import time

from conftest import brute_graph, record
from strongdom import complete, cycle, gamma_oracle, gamma_st, gamma_st_oracle, path, star
from strongdom.campaign import CampaignConfig, run_campaign
from strongdom.families import SamplingLimits, fig_example, fig_example3, random_connected
from strongdom.verify import verify_instance

LIMITS = SamplingLimits(min_order=2, max_composed=18, r_values=(2, 3))

BOUND_THEOREMS = ("disconnected", "1-gluing", "2-gluing-upper", "2-gluing-lower", "2-gluing-lower2",
                  "2-gluing-upper-Kr", "chain", "link", "circuit", "edge-deletion", "bridge")

CONSTRUCTION_THEOREMS = {"edge-glue": "2-gluing-upper", "kr-glue": "2-gluing-upper-Kr",
                         "chain": "chain", "link": "link", "circuit": "circuit"}


def test_criterion_1_figures():
    start = time.perf_counter()
    problems = []
    res = verify_instance("2-gluing-lower", fig_example())
    rep = res.report
    got = (rep.terms["gst_components"], rep.exact, rep.terms["psi_12"], rep.lower, rep.tight_lower)
    if got != ([1, 2], 2, 6, 2, True):
        problems.append(f"fig_example {got}")
    for r in (2, 3, 4):
        rep = verify_instance("2-gluing-lower-Kr", fig_example3(r)).report
        psi = r * r - r + 1
        got = (rep.terms["gst_components"], rep.exact, rep.terms["psi_r"], rep.lower_raw)
        if got != ([1, 2], 2, [psi, psi], 2):
            problems.append(f"fig_example3 r={r} {got}")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 1.0
    record("criterion 1 (figures)", ok, f"{elapsed:.3f}s {problems or 'all exact'}")
    assert ok, problems


def test_criterion_2_oracle_equivalence():
    start = time.perf_counter()
    mismatches = []
    for i in range(1000):
        rng = random.Random(f"oracle:{i}")
        g = random_connected(rng.randint(1, 12), rng.uniform(0.15, 0.85), rng)
        a, b = gamma_st(g).value, gamma_st_oracle(g).value
        if a != b:
            mismatches.append(i)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    record("criterion 2 (oracle equivalence)", ok,
           f"1000 graphs, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok, mismatches[:10]


def test_criterion_3_bound_suites():
    start = time.perf_counter()
    report = run_campaign(CampaignConfig(BOUND_THEOREMS, samples=200, seed=0, limits=LIMITS))
    elapsed = time.perf_counter() - start
    summary = report.summary()
    bad = {t: s["violations"] for t, s in summary.items() if s["violations"] or s["timeouts"]}
    ok = not bad and elapsed < 600 and all(s["instances"] == 200 for s in summary.values())
    ids = [r["instance_id"] for r in report.violations]
    record("criterion 3 (bound suites)", ok,
           f"{len(report.rows)} instances, violations {bad or 'none'} {ids} {elapsed:.1f}s")
    assert ok, [report.to_json()["violations"]]


def test_criterion_4_constructions():
    start = time.perf_counter()
    report = run_campaign(CampaignConfig(tuple(CONSTRUCTION_THEOREMS.values()), samples=200,
                                         seed=0, limits=LIMITS))
    elapsed = time.perf_counter() - start
    per = {}
    for name, theorem in CONSTRUCTION_THEOREMS.items():
        rows = [r for r in report.rows if r["theorem"] == theorem]
        bad = [r["instance_id"] for r in rows
               if not r["construction_valid"] or r["construction_size"] > r["upper"]]
        per[name] = (len(rows), len(bad))
    ok = all(n == 200 and b == 0 for n, b in per.values()) and elapsed < 300
    record("criterion 4 (constructions)", ok, f"(checked, invalid) {per} {elapsed:.1f}s")
    assert ok, per


def test_criterion_5_conjecture_harness(tmp_path):
    cfg = CampaignConfig(("2-gluing-lower-Kr",), samples=500, seed=0,
                         limits=SamplingLimits(min_order=2, r_values=(3,)))
    report = run_campaign(cfg)
    _, json_path = report.write(tmp_path / "conjecture")
    data = report.to_json()
    rows_ok = len(report.rows) == 500 and json_path.exists()
    needed = {"inputs", "seed", "instance_id", "exact", "lower_raw", "terms"}
    repro_ok = all(needed <= set(d) and d["inputs"]["components"] for d in data["flagged"])
    ok = rows_ok and repro_ok and not report.violations
    record("criterion 5 (conjecture harness)", ok,
           f"500 r=3 instances, {len(data['flagged'])} flagged, report written")
    assert ok


def test_criterion_6_solver_values():
    fails = []
    for n in range(1, 13):
        if gamma_st_oracle(complete(n)).value != 1:
            fails.append(f"K_{n}")
        if gamma_st_oracle(star(n)).value != 1:
            fails.append(f"star({n})")
    if gamma_st_oracle(path(4)).value != 2 or brute_graph(path(4)) != 2:
        fails.append("P_4")
    for n in range(3, 13):
        if gamma_st_oracle(cycle(n)).value != gamma_oracle(cycle(n)).value:
            fails.append(f"C_{n}")
    record("criterion 6 (solver unit values)", not fails, f"{fails or 'all exact'}")
    assert not fails


def test_criterion_7_determinism():
    cfg = CampaignConfig(BOUND_THEOREMS + ("v-sum", "2-gluing-lower-Kr"), samples=20, seed=42,
                         limits=LIMITS)
    first, second = run_campaign(cfg).to_csv(), run_campaign(cfg).to_csv()
    parallel = run_campaign(CampaignConfig(cfg.theorems, 20, 42, limits=LIMITS, workers=2)).to_csv()
    ok = first == second == parallel
    record("criterion 7 (determinism)", ok, f"{len(first)} CSV bytes, repeat and 2 workers identical")
    assert ok
