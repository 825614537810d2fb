//! Acceptance criteria 1-9. Each test prints one line
//! `criterion <n> PASS|FAIL <details>` and then asserts it.
//!
//! Run with `cargo test -p coxtile-cli --test acceptance -- --nocapture --test-threads 1`
//! to see all lines in order.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use coxtile::cases::{host_relations, partition_relations, Case};
use coxtile::config::Config;
use coxtile::coxeter::{CoxeterGroup, CoxeterType, Family};
use coxtile::embeddings::{table_row, AdmissiblePartition, TableRow};
use coxtile::render::{render_tiling, RenderConfig};
use coxtile::tilings::{
    coverage, mirror_a, verify_host_element, verify_partition_element, BijectionReport, DGeometry,
    EdgeBasis, Tiling,
};
use coxtile::words::RelationSet;

const H3_LIMIT: Duration = Duration::from_secs(30);
const TYPE_A_LIMIT: Duration = Duration::from_secs(60);
const TYPE_D_LIMIT: Duration = Duration::from_secs(300);
const H3_WORDS: usize = 286;
const AREA_REL_TOL: f64 = 1e-9;
const DETERMINISM_REPEATS: usize = 2;

fn line(n: u32, ok: bool, details: String) -> bool {
    println!(
        "criterion {n} {} {details}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn cli(args: &[&str]) -> (u8, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = coxtile_cli::run(
        std::iter::once("coxtile").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, out)
}

fn strict_basis(t: CoxeterType) -> EdgeBasis {
    match t.family {
        Family::A => EdgeBasis::regular_a(t.rank + 1).unwrap(),
        _ => EdgeBasis::d(
            t.rank,
            DGeometry::Strict {
                threshold: Config::default().steepness,
            },
        )
        .unwrap(),
    }
}

/// Per-element host check; returns the total, the failing elements and every
/// class representative tiling.
fn exhaustive(t: CoxeterType) -> (BijectionReport, usize, usize, Vec<Tiling>) {
    let cfg = Config::default();
    let g = CoxeterGroup::host(t, &cfg).unwrap();
    let rels = host_relations(&g);
    let mut total = BijectionReport::identity();
    let mut failing = 0;
    let mut tilings = Vec::new();
    for e in g.table.elements() {
        let (r, reps) = verify_host_element(&g, e, &rels, &cfg).unwrap();
        if !r.ok || r.classes != r.tilings {
            failing += 1;
        }
        total = total.merge(r);
        tilings.extend(reps);
    }
    (total, g.table.len(), failing, tilings)
}

fn partition(row: TableRow) -> AdmissiblePartition {
    table_row(row, &Config::default()).unwrap()
}

fn x0_subtilings(p: &AdmissiblePartition, k: &RelationSet) -> (BijectionReport, Vec<Tiling>) {
    verify_partition_element(p, &p.x().longest(), k, &Config::default()).unwrap()
}

/// Commuting pairs of the embedded group except `t1, t3`.
fn k_without_t1_t3(p: &AdmissiblePartition) -> RelationSet {
    let all = RelationSet::all_commuting(&p.x().system);
    RelationSet::from_pairs(
        all.pairs()
            .filter(|&pair| pair != (0, 2))
            .collect::<Vec<_>>(),
    )
}

#[test]
fn criterion_1_h3_count() {
    let start = Instant::now();
    let (code, out) = cli(&["verify", "--case", "h3-in-d6"]);
    let elapsed = start.elapsed();
    let text = String::from_utf8(out).unwrap();
    let expect =
        format!("case=h3-in-d6 words={H3_WORDS} classes={H3_WORDS} tilings={H3_WORDS} ok=true\n");
    let ok = code == 0 && text == expect && elapsed < H3_LIMIT;
    assert!(line(
        1,
        ok,
        format!("{} in {elapsed:.2?} (limit {H3_LIMIT:?})", text.trim())
    ));
}

#[test]
fn criterion_2_type_a_bijection() {
    let start = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for (t, order) in [(CoxeterType::a(3), 24), (CoxeterType::a(4), 120)] {
        let (total, elements, failing, _) = exhaustive(t);
        ok &= elements == order && failing == 0 && total.ok;
        details.push(format!(
            "{t}: elements={elements} words={} classes={} tilings={} failing={failing}",
            total.words, total.classes, total.tilings
        ));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < TYPE_A_LIMIT;
    assert!(line(
        2,
        ok,
        format!(
            "{} in {elapsed:.2?} (limit {TYPE_A_LIMIT:?})",
            details.join("; ")
        )
    ));
}

#[test]
fn criterion_3_type_d_bijection() {
    let start = Instant::now();
    let (total, elements, failing, _) = exhaustive(CoxeterType::d(4));
    let elapsed = start.elapsed();
    let ok = elements == 192 && failing == 0 && total.ok && elapsed < TYPE_D_LIMIT;
    assert!(line(
        3,
        ok,
        format!(
            "D4: elements={elements} words={} classes={} tilings={} failing={failing} in {elapsed:.2?} (limit {TYPE_D_LIMIT:?})",
            total.words, total.classes, total.tilings
        )
    ));
}

#[test]
fn criterion_4_b_in_a() {
    let p5 = partition(TableRow::AOddToB(3));
    let p6 = partition(TableRow::AEvenToB(3));
    let (r5, t5) = x0_subtilings(&p5, &partition_relations(&p5));
    let (r6, _) = x0_subtilings(&p6, &partition_relations(&p6));
    let basis = strict_basis(CoxeterType::a(5));
    let mirror_fixed = t5
        .iter()
        .filter(|t| mirror_a(t, &basis).unwrap() == **t)
        .count();
    let ok = r5.ok
        && r6.ok
        && r5.classes == r6.classes
        && r5.tilings == r6.tilings
        && mirror_fixed == t5.len();
    assert!(line(
        4,
        ok,
        format!(
            "A5: classes={} subtilings={}; A6: classes={} subtilings={}; A5 mirror-fixed={}/{}",
            r5.classes,
            r5.tilings,
            r6.classes,
            r6.tilings,
            mirror_fixed,
            t5.len()
        )
    ));
}

#[test]
fn criterion_5_b_in_d() {
    let mut ok = true;
    let mut details = Vec::new();
    for row in [TableRow::DToB(3), TableRow::DToB(4)] {
        let p = partition(row);
        let k = k_without_t1_t3(&p);
        let (r, tilings) = x0_subtilings(&p, &k);
        ok &= r.ok && r.classes == r.tilings;
        let tiles: HashSet<usize> = tilings.iter().map(Tiling::len).collect();
        details.push(format!(
            "{}: K={k} words={} classes={} subtilings={} tiles-per-subtiling={tiles:?}",
            p.x_type(),
            r.words,
            r.classes,
            r.tilings
        ));
        // reported only: K induced from the host relations
        let induced = partition_relations(&p);
        let (ri, _) = x0_subtilings(&p, &induced);
        details.push(format!(
            "[induced K={induced}: classes={} subtilings={}]",
            ri.classes, ri.tilings
        ));
    }
    details.push("six-tile remark reported, not asserted".into());
    assert!(line(5, ok, details.join("; ")));
}

#[test]
fn criterion_6_induced_matrices() {
    let mut ok = true;
    let mut details = Vec::new();
    for row in [
        TableRow::AOddToB(3),
        TableRow::AEvenToB(3),
        TableRow::DToB(3),
        TableRow::DToB(4),
        TableRow::D6ToH3,
    ] {
        let p = partition(row);
        let images = p.images();
        let expect = p.x_type().diagram_matrix();
        let r = images.len();
        let mut row_ok = r == expect.rank();
        for i in 0..r {
            for j in 0..r {
                let m = if i == j {
                    1
                } else {
                    images[i].compose(&images[j]).order()
                };
                row_ok &= m == expect.get(i, j);
            }
        }
        ok &= row_ok;
        details.push(format!(
            "{row}={}",
            if row_ok { "match" } else { "MISMATCH" }
        ));
    }
    assert!(line(6, ok, details.join(" ")));
}

#[test]
fn criterion_7_length_oracle() {
    let g = CoxeterGroup::host(CoxeterType::a(4), &Config::default()).unwrap();
    let mut mismatches = 0;
    for (i, e) in g.table.elements().iter().enumerate() {
        let v: Vec<usize> = e.images().collect();
        let inv = (0..v.len())
            .flat_map(|a| (a + 1..v.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| v[a] > v[b])
            .count();
        if inv != g.table.length(i) {
            mismatches += 1;
        }
    }
    let ok = g.table.len() == 120 && mismatches == 0;
    assert!(line(
        7,
        ok,
        format!("A4: elements={} mismatches={mismatches}", g.table.len())
    ));
}

#[test]
fn criterion_8_coverage() {
    let mut all: Vec<(CoxeterType, Tiling)> = Vec::new();
    for t in [CoxeterType::a(3), CoxeterType::a(4), CoxeterType::d(4)] {
        all.extend(exhaustive(t).3.into_iter().map(|x| (t, x)));
    }
    for row in [
        TableRow::AOddToB(3),
        TableRow::AEvenToB(3),
        TableRow::DToB(3),
        TableRow::DToB(4),
    ] {
        let p = partition(row);
        let (_, tilings) = x0_subtilings(&p, &partition_relations(&p));
        all.extend(tilings.into_iter().map(|x| (row.host_type(), x)));
    }
    let mut worst_area: f64 = 0.0;
    let mut worst_overlap: f64 = 0.0;
    let mut failing = 0;
    for (t, tiling) in &all {
        let c = coverage(tiling, &strict_basis(*t)).unwrap();
        let scale = c.polygon_area.abs().max(1.0);
        worst_area = worst_area.max((c.tile_area - c.polygon_area).abs() / scale);
        worst_overlap = worst_overlap.max(c.max_overlap / scale);
        if !c.ok(AREA_REL_TOL) {
            failing += 1;
        }
    }
    let ok = failing == 0 && !all.is_empty();
    assert!(line(
        8,
        ok,
        format!(
            "tilings={} failing={failing} worst area error={worst_area:.1e} worst overlap={worst_overlap:.1e} (tol {AREA_REL_TOL:.0e})",
            all.len()
        )
    ));
}

#[test]
fn criterion_9_determinism() {
    let mut differing = Vec::new();
    for case in Case::ALL {
        let runs: Vec<(u8, Vec<u8>)> = (0..DETERMINISM_REPEATS)
            .map(|_| cli(&["verify", "--case", case.name()]))
            .chain(std::iter::once(cli(&[
                "--jobs",
                "4",
                "verify",
                "--case",
                case.name(),
            ])))
            .collect();
        if runs.windows(2).any(|w| w[0] != w[1]) {
            differing.push(case.name().to_string());
        }
    }
    let mut svgs = 0;
    let rc = RenderConfig::default();
    for row in [TableRow::AOddToB(3), TableRow::DToB(3), TableRow::D6ToH3] {
        let p = partition(row);
        let (_, tilings) = x0_subtilings(&p, &partition_relations(&p));
        for (geometry, basis) in [
            ("strict", strict_basis(row.host_type())),
            (
                "regular",
                match row.host_type().family {
                    Family::A => EdgeBasis::regular_a(row.host_type().rank + 1).unwrap(),
                    _ => EdgeBasis::d(row.host_type().rank, DGeometry::Regular).unwrap(),
                },
            ),
        ] {
            for t in &tilings {
                let a = render_tiling(t, &basis, &rc).unwrap();
                let b = render_tiling(t, &basis, &rc).unwrap();
                svgs += 1;
                if a != b {
                    differing.push(format!("{row} {geometry} svg"));
                }
            }
        }
    }
    for args in [
        ["render", "--host", "A5", "--word", "3 2 4 1 3 5"],
        ["render", "--host", "D5", "--word", "1 2 3 4 5 2"],
        ["render", "--row", "D6-H3", "--xword", "1 2 1 3"],
    ] {
        if cli(&args) != cli(&args) {
            differing.push(args.join(" "));
        }
        svgs += 1;
    }
    let ok = differing.is_empty();
    assert!(line(
        9,
        ok,
        format!(
            "verify cases={} svg emissions={svgs} differing={differing:?}",
            Case::ALL.len()
        )
    ));
}
