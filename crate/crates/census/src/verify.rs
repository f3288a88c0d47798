//! The verification suite: every acceptance criterion as a named check,
//! runnable from `cargo test` (the acceptance suite) and from the `verify`
//! subcommand.
//!
//! Checks that need an independent oracle carry it here, structurally
//! separate from the implementation paths they exercise: the hyperelliptic
//! genus criterion is compared against a direct singular-point search in
//! both affine charts, and the L-polynomial pipeline is compared against
//! direct point counts over F_32.

use std::path::Path;

use crate::census::{self, CensusOptions, CensusResult};
use crate::forms4::{
    act_cubic, act_quad, quad_classify_check, stabilizer4, CubicForm4, QuadForm4,
};
use crate::gf2k::field_new;
use crate::polyf2::{classify_deg_le, orbit_and_stabilizer, PolyF2};
use crate::record::CurveModel;
use crate::report::{distribution_table, tables};
use crate::trig::{self, cubic_orbit, Quadric};
use crate::zeta::{counts_from_l, a_numbers};
use crate::{hyper, report};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub id: &'static str,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(id: &'static str, name: &'static str, pass: bool, detail: String) -> Check {
    Check { id, name, pass, detail }
}

/// Stabilizer orders of the three quadric normal forms, frozen from the
/// brute-force scan over all 20160 matrices.
pub const QUADRIC_STABILIZER_ORDERS: [usize; 3] = [72, 120, 48];

/// Criterion 1: hyperelliptic census size.
pub fn check_hyp_count(r: &CensusResult) -> Check {
    let got = r.hyp_count();
    check("1", "hyperelliptic census size = 264", got == 264, format!("got {got}"))
}

/// Criterion 2: trigonal census size and combined total.
pub fn check_trig_total(r: &CensusResult) -> Check {
    let trig = r.trig_count();
    let total = r.records.len();
    check(
        "2",
        "trigonal census size = 780, total = 1044",
        trig == 780 && total == 1044,
        format!("got trigonal {trig}, total {total}"),
    )
}

/// Criterion 3: distinct L-polynomials.
pub fn check_iso_classes(r: &CensusResult) -> Check {
    let got = r.iso_classes.len();
    check("3", "distinct L-polynomials = 620", got == 620, format!("got {got}"))
}

const TABLE_1: [[u32; 9]; 3] = [
    [9, 32, 58, 66, 58, 32, 9, 0, 0],
    [31, 119, 202, 201, 117, 68, 30, 11, 1],
    [40, 151, 260, 267, 175, 100, 39, 11, 1],
];
const TABLE_2: [[u32; 8]; 3] = [
    [33, 61, 79, 61, 27, 3, 0, 0],
    [78, 169, 211, 175, 103, 35, 8, 1],
    [111, 230, 290, 236, 130, 38, 8, 1],
];
const TABLE_3: [[u32; 9]; 3] = [
    [55, 28, 98, 28, 55, 0, 0, 0, 0],
    [53, 135, 195, 180, 109, 62, 36, 8, 2],
    [108, 163, 293, 208, 164, 62, 36, 8, 2],
];
const TABLE_4: [[u32; 11]; 3] = [
    [17, 20, 52, 39, 63, 38, 23, 12, 0, 0, 0],
    [19, 78, 135, 179, 152, 98, 68, 28, 16, 6, 1],
    [36, 98, 187, 218, 215, 136, 91, 40, 16, 6, 1],
];

/// Criterion 4: the four distribution tables, cell for cell.
pub fn check_tables(r: &CensusResult) -> Check {
    let mut mismatches = Vec::new();
    let expect: [(&[u32], &[u32], &[u32]); 4] = [
        (&TABLE_1[0], &TABLE_1[1], &TABLE_1[2]),
        (&TABLE_2[0], &TABLE_2[1], &TABLE_2[2]),
        (&TABLE_3[0], &TABLE_3[1], &TABLE_3[2]),
        (&TABLE_4[0], &TABLE_4[1], &TABLE_4[2]),
    ];
    for (index, (hyp, trig, total)) in expect.iter().enumerate() {
        let t = distribution_table(&r.records, index + 1);
        if t.hyp != *hyp || t.trig != *trig || t.total != *total {
            mismatches.push(format!(
                "a_{}: got hyp {:?}, trig {:?}, total {:?}",
                index + 1,
                t.hyp,
                t.trig,
                t.total
            ));
        }
    }
    check(
        "4",
        "distribution tables for a_1..a_4 reproduced exactly",
        mismatches.is_empty(),
        if mismatches.is_empty() { "all 4 tables match".into() } else { mismatches.join("; ") },
    )
}

/// Criterion 5: the L-polynomial multiplicity table.
pub fn check_multiplicity(r: &CensusResult) -> Check {
    let t = tables(r).multiplicity;
    let hyp = [403u32, 174, 40, 2, 1, 0, 0, 0];
    let trig = [99u32, 341, 128, 31, 15, 6, 0, 0];
    let total = [0u32, 361, 165, 49, 25, 15, 4, 1];
    let ok = t.hyp == hyp && t.trig == trig && t.total == total;
    check(
        "5",
        "L-multiplicity table reproduced exactly",
        ok,
        format!("got hyp {:?}, trig {:?}, total {:?}", t.hyp, t.trig, t.total),
    )
}

// The 15 representatives named in the source classification, with the order
// of each stabilizer, keyed by bit mask.
const Q_CLASSES: [(u64, usize); 15] = [
    (0b1, 2),
    (0b10, 1),
    (0b100, 1),
    (0b110, 2),
    (0b111, 2),
    (0b1100, 2),
    (0b1110, 1),
    (0b1011, 1),
    (0b10010, 6),
    (0b10101, 2),
    (0b10110, 1),
    (0b10011, 2),
    (0b11001, 1),
    (0b100011, 3),
    (0b100101, 1),
];

/// Criterion 6: the degree ≤ 5 classification matches the 15 named classes
/// orbit-wise, with the expected stabilizer orders.
pub fn check_q_classification() -> Check {
    let reps = classify_deg_le(5);
    if reps.len() != 15 {
        return check("6", "15 orbits of degree ≤ 5 polynomials", false, format!(
            "got {} orbits", reps.len()
        ));
    }
    let mut matched = [false; 15];
    let mut problems = Vec::new();
    for &rep in &reps {
        let (orbit, stab) = orbit_and_stabilizer(5, rep).expect("bounded degree");
        let hit: Vec<usize> = Q_CLASSES
            .iter()
            .enumerate()
            .filter(|(_, &(mask, _))| orbit.contains(&PolyF2::new(mask)))
            .map(|(i, _)| i)
            .collect();
        if hit.len() != 1 {
            problems.push(format!("orbit of {rep} hits {} named classes", hit.len()));
            continue;
        }
        let idx = hit[0];
        if matched[idx] {
            problems.push(format!("named class {idx} hit twice"));
        }
        matched[idx] = true;
        let expected = Q_CLASSES[idx].1;
        if stab.len() != expected {
            problems.push(format!(
                "stabilizer of {rep}: got {}, expected {expected}",
                stab.len()
            ));
        }
    }
    if !matched.iter().all(|&m| m) {
        problems.push("not all named classes were matched".into());
    }
    check(
        "6",
        "q-classification: 15 orbits with the expected stabilizer orders",
        problems.is_empty(),
        if problems.is_empty() { "orbit-wise match".into() } else { problems.join("; ") },
    )
}

/// Criterion 7: exactly three GL(4,2)-orbits of rank ≥ 3 quadratic forms,
/// with invariants (4, Arf 0), (4, Arf 1), (3, —) and the frozen stabilizer
/// orders; orbit sizes double-checked by orbit–stabilizer.
pub fn check_quadric_classification() -> Check {
    let orbits = quad_classify_check();
    let mut problems = Vec::new();
    if orbits.len() != 3 {
        problems.push(format!("got {} orbits", orbits.len()));
    }
    for (quadric, expected_order) in Quadric::ALL.iter().zip(QUADRIC_STABILIZER_ORDERS) {
        let form = quadric.form();
        let stab = stabilizer4(form);
        if stab.len() != expected_order {
            problems.push(format!(
                "stabilizer of {}: got {}, expected {expected_order}",
                quadric.label(),
                stab.len()
            ));
        }
        let (rank, arf) = crate::forms4::rank_arf(form);
        let expect_inv = match quadric {
            Quadric::Hyperbolic => (4, Some(0)),
            Quadric::Elliptic => (4, Some(1)),
            Quadric::Cone => (3, None),
        };
        if (rank, arf) != expect_inv {
            problems.push(format!("invariants of {}: got {:?}", quadric.label(), (rank, arf)));
        }
        // The orbit containing this normal form must satisfy orbit–stabilizer.
        let orbit = orbits.iter().find(|o| {
            let (or, oa) = (o.rank, o.arf);
            (or, oa) == expect_inv
        });
        match orbit {
            None => problems.push(format!("no orbit with invariants {expect_inv:?}")),
            Some(o) => {
                if o.size * stab.len() != 20160 {
                    problems.push(format!(
                        "orbit-stabilizer mismatch for {}: {} × {}",
                        quadric.label(),
                        o.size,
                        stab.len()
                    ));
                }
            }
        }
    }
    check(
        "7",
        "quadric classification: 3 orbits, invariants and stabilizer orders",
        problems.is_empty(),
        if problems.is_empty() {
            format!("orders {:?}", QUADRIC_STABILIZER_ORDERS)
        } else {
            problems.join("; ")
        },
    )
}

// ---------- fixtures ----------

fn quad(monos: &[(usize, usize)]) -> QuadForm4 {
    QuadForm4::from_monomials(monos)
}

fn cubic(monos: &[(usize, usize, usize)]) -> CubicForm4 {
    CubicForm4::from_monomials(monos)
}

/// Canonical census key of an arbitrary smooth (quadric, cubic) model: map
/// the quadric to its normal form by a change of variables, then take the
/// minimal cubic in the orbit under the stabilizer and quadric shifts.
pub fn canonical_trig_model(q: QuadForm4, f: CubicForm4) -> (Quadric, CubicForm4) {
    let (rank, arf) = crate::forms4::rank_arf(q);
    let target = match (rank, arf) {
        (4, Some(0)) => Quadric::Hyperbolic,
        (4, Some(1)) => Quadric::Elliptic,
        (3, None) => Quadric::Cone,
        other => panic!("not a census quadric: invariants {other:?}"),
    };
    let normal = target.form();
    let m = crate::forms4::gl4_elements()
        .iter()
        .copied()
        .find(|&m| act_quad(m, q) == normal)
        .expect("same orbit");
    let image = act_cubic(m, f);
    let stab = stabilizer4(normal);
    let orbit = cubic_orbit(normal, &stab, image);
    (target, orbit[0])
}

/// Canonical census key of a hyperelliptic model whose q is already one of
/// the 15 representatives: the minimal p in its move orbit.
pub fn canonical_hyp_model(q: PolyF2, p: PolyF2) -> (PolyF2, PolyF2) {
    let (_, stab) = orbit_and_stabilizer(5, q).expect("bounded degree");
    let orbit = hyper::p_orbit(q, &stab, p);
    (q, orbit[0])
}

struct TrigFixture {
    name: &'static str,
    quadric: QuadForm4,
    cubic: CubicForm4,
    /// Quoted point counts, as (k, N_k) with k 1-based.
    n_checks: &'static [(usize, i64)],
    /// Quoted degree-point counts, as (k, a_k).
    a_checks: &'static [(usize, i64)],
}

fn named_fixtures() -> Vec<TrigFixture> {
    let q2ish = quad(&[(0, 0), (0, 1), (1, 1), (2, 3)]); // X²+XY+Y²+ZT
    let q1 = Quadric::Hyperbolic.form();
    let xy_t2 = quad(&[(0, 1), (3, 3)]); // XY + T²
    vec![
        TrigFixture {
            name: "minimal",
            quadric: q2ish,
            cubic: cubic(&[(1, 1, 1), (0, 2, 2), (2, 2, 2), (0, 1, 3), (3, 3, 3)]),
            n_checks: &[(1, 0), (2, 0), (3, 0), (4, 4)],
            a_checks: &[(1, 0), (2, 0), (3, 0), (4, 1)],
        },
        TrigFixture {
            name: "maximal",
            quadric: q1,
            cubic: cubic(&[
                (0, 1, 1),
                (1, 1, 1),
                (0, 0, 2),
                (1, 1, 2),
                (0, 2, 2),
                (0, 0, 3),
                (1, 1, 3),
                (0, 3, 3),
            ]),
            n_checks: &[(1, 8)],
            a_checks: &[(2, 0), (3, 0), (4, 2)],
        },
        TrigFixture {
            name: "a2-maximal",
            quadric: q2ish,
            cubic: cubic(&[(0, 0, 1), (0, 0, 3), (0, 1, 1), (0, 3, 3), (2, 2, 2)]),
            n_checks: &[(1, 1), (2, 15)],
            a_checks: &[(2, 7)],
        },
        TrigFixture {
            name: "a4-maximal",
            quadric: q2ish,
            cubic: cubic(&[
                (0, 0, 1),
                (0, 1, 1),
                (0, 1, 2),
                (0, 1, 3),
                (0, 3, 3),
                (1, 2, 2),
            ]),
            n_checks: &[(4, 45)],
            a_checks: &[(4, 10)],
        },
        TrigFixture {
            name: "a3-maximal-1",
            quadric: xy_t2,
            cubic: cubic(&[
                (0, 0, 0),
                (0, 0, 2),
                (0, 1, 1),
                (0, 1, 2),
                (0, 1, 3),
                (0, 2, 3),
                (1, 1, 1),
                (1, 1, 3),
                (2, 2, 2),
            ]),
            n_checks: &[(3, 25)],
            a_checks: &[(3, 8)],
        },
        TrigFixture {
            name: "a3-maximal-2",
            quadric: q1,
            cubic: cubic(&[
                (0, 0, 0),
                (0, 0, 2),
                (0, 0, 3),
                (0, 3, 3),
                (1, 1, 1),
                (1, 1, 2),
                (1, 1, 3),
                (1, 3, 3),
                (2, 2, 2),
            ]),
            n_checks: &[(3, 25)],
            a_checks: &[(3, 8)],
        },
        TrigFixture {
            name: "a5-maximal",
            quadric: q2ish,
            cubic: cubic(&[
                (0, 0, 0),
                (0, 0, 1),
                (0, 1, 1),
                (0, 0, 2),
                (1, 1, 2),
                (1, 2, 2),
                (2, 2, 2),
                (0, 0, 3),
                (0, 3, 3),
            ]),
            n_checks: &[(1, 1), (5, 71)],
            a_checks: &[(5, 14)],
        },
    ]
}

// The four hyperelliptic models of the shared-L quadruple.
fn quadruple_models() -> [(PolyF2, PolyF2); 4] {
    let q = PolyF2::new(0b11001); // x⁴+x³+1
    [
        (q, PolyF2::new(0b10_0000_0001)), // x⁹+1
        (q, PolyF2::new(0b11_0000_0010)), // x⁹+x⁸+x
        (q, PolyF2::new(0b11_0000_1000)), // x⁹+x⁸+x³
        (q, PolyF2::new(0b10_0000_1011)), // x⁹+x³+x+1
    ]
}

// The three trigonal members of the same isogeny class.
fn quadruple_trig_models() -> [(QuadForm4, CubicForm4); 3] {
    let q1 = Quadric::Hyperbolic.form();
    let xy_t2 = quad(&[(0, 1), (3, 3)]);
    [
        (
            q1,
            cubic(&[
                (0, 0, 0),
                (0, 1, 1),
                (1, 1, 1),
                (0, 0, 2),
                (0, 1, 2),
                (0, 2, 2),
                (0, 3, 3),
            ]),
        ),
        (
            q1,
            cubic(&[
                (0, 0, 0),
                (0, 0, 1),
                (0, 1, 1),
                (1, 1, 1),
                (0, 0, 2),
                (0, 1, 2),
                (1, 1, 2),
                (0, 2, 2),
                (0, 0, 3),
                (0, 1, 3),
                (0, 3, 3),
            ]),
        ),
        (
            xy_t2,
            cubic(&[
                (0, 0, 1),
                (1, 1, 1),
                (0, 1, 2),
                (2, 2, 2),
                (0, 0, 3),
                (0, 1, 3),
                (1, 1, 3),
                (0, 2, 3),
            ]),
        ),
    ]
}

/// Criterion 8: every named example appears in the census with its quoted
/// invariants, and the shared-L families have the stated shapes.
pub fn check_fixtures(r: &CensusResult) -> Check {
    let mut problems = Vec::new();
    let records = &r.records;

    let count_where = |pred: &dyn Fn(&crate::record::CurveRecord) -> bool| {
        records.iter().filter(|rec| pred(rec)).count()
    };

    // Unique extremal curves.
    if count_where(&|rec| rec.n[0] == 8) != 1 {
        problems.push("N_1 = 8 curve not unique".into());
    }
    if count_where(&|rec| rec.a[1] == 7 && rec.n[1] == 15) != 1
        || count_where(&|rec| rec.a[1] == 7) != 1
    {
        problems.push("a_2 = 7 curve (N_2 = 15) not unique".into());
    }
    if count_where(&|rec| rec.a[3] == 10 && rec.n[3] == 45) != 1
        || count_where(&|rec| rec.a[3] == 10) != 1
    {
        problems.push("a_4 = 10 curve (N_4 = 45) not unique".into());
    }
    if count_where(&|rec| rec.a[2] == 8 && rec.n[2] == 25) != 2
        || count_where(&|rec| rec.a[2] == 8) != 2
    {
        problems.push("a_3 = 8 curves (N_3 = 25) not exactly two".into());
    }
    if count_where(&|rec| rec.a[4] == 14 && rec.n[4] == 71) != 1
        || count_where(&|rec| rec.a[4] == 14) != 1
    {
        problems.push("a_5 = 14 curve (N_5 = 71) not unique".into());
    }

    // a_5 = 0 census. The quoted "4 curves, two of them with isogenous
    // Jacobians" describes the trigonal family (the surrounding examples are
    // all trigonal); the full census has 7 such classes, 3 hyperelliptic and
    // 4 trigonal. Both facts are pinned here; N_5 behind them is confirmed
    // by the independent F_32 recount (9h).
    let a5_zero: Vec<_> = records.iter().filter(|rec| rec.a[4] == 0).collect();
    let a5_zero_trig: Vec<_> =
        a5_zero.iter().filter(|rec| !rec.is_hyperelliptic()).collect();
    if a5_zero.len() != 7 || a5_zero_trig.len() != 4 {
        problems.push(format!(
            "a_5 = 0 count: got {} ({} trigonal)",
            a5_zero.len(),
            a5_zero_trig.len()
        ));
    } else {
        let mut ls: Vec<[i64; 9]> = a5_zero_trig.iter().map(|rec| rec.l.c).collect();
        ls.sort();
        ls.dedup();
        if ls.len() != 3 {
            problems.push(format!(
                "a_5 = 0 trigonal curves: {} distinct L-polynomials, expected 3",
                ls.len()
            ));
        }
    }

    // The size-7 isogeny class: 4 hyperelliptic + 3 trigonal members,
    // and the hyperelliptic members are the canonical quadruple models.
    let size7: Vec<_> = records.iter().filter(|rec| rec.iso_size == 7).collect();
    let hyp7 = size7.iter().filter(|rec| rec.is_hyperelliptic()).count();
    if size7.len() != 7 || hyp7 != 4 {
        problems.push(format!(
            "size-7 class: got {} members, {} hyperelliptic",
            size7.len(),
            hyp7
        ));
    } else {
        for (q, p) in quadruple_models() {
            let key = canonical_hyp_model(q, p);
            let present = size7.iter().any(|rec| {
                matches!(rec.model, CurveModel::Hyperelliptic { q: rq, p: rp } if (rq, rp) == key)
            });
            if !present {
                problems.push(format!("quadruple model ({q}, {p}) missing from size-7 class"));
            }
        }
        for (qf, cf) in quadruple_trig_models() {
            let key = canonical_trig_model(qf, cf);
            let member = size7.iter().find(|rec| {
                matches!(rec.model, CurveModel::Trigonal { quadric, cubic }
                    if (quadric, cubic) == key)
            });
            match member {
                None => problems.push(format!(
                    "trigonal member ({}, {:05x}) missing from size-7 class",
                    key.0.label(),
                    key.1.bits()
                )),
                Some(rec) => {
                    if rec.n[..4] != [3, 9, 9, 21] {
                        problems.push(format!(
                            "trigonal member ({}, {:05x}): counts {:?}",
                            key.0.label(),
                            key.1.bits(),
                            &rec.n[..4]
                        ));
                    }
                }
            }
        }
    }

    // Every named fixture appears in the census with its quoted counts.
    for fx in named_fixtures() {
        let key = canonical_trig_model(fx.quadric, fx.cubic);
        match records.iter().find(|rec| {
            matches!(rec.model, CurveModel::Trigonal { quadric, cubic }
                if (quadric, cubic) == key)
        }) {
            None => problems.push(format!("fixture '{}' missing from census", fx.name)),
            Some(rec) => {
                for &(k, nk) in fx.n_checks {
                    if rec.n[k - 1] != nk {
                        problems.push(format!(
                            "fixture '{}': N_{k} = {}, expected {nk}",
                            fx.name,
                            rec.n[k - 1]
                        ));
                    }
                }
                for &(k, ak) in fx.a_checks {
                    if rec.a[k - 1] != ak {
                        problems.push(format!(
                            "fixture '{}': a_{k} = {}, expected {ak}",
                            fx.name,
                            rec.a[k - 1]
                        ));
                    }
                }
            }
        }
    }

    // y² + xy = x⁹ + 1 shares its L with exactly four trigonal curves,
    // spanning all three quadric labels.
    let key = canonical_hyp_model(PolyF2::X, PolyF2::new(0b10_0000_0001));
    match records.iter().find(|rec| {
        matches!(rec.model, CurveModel::Hyperelliptic { q, p } if (q, p) == key)
    }) {
        None => problems.push("model (x, x⁹+1) missing from census".into()),
        Some(base) => {
            let partners: Vec<_> = records
                .iter()
                .filter(|rec| !rec.is_hyperelliptic() && rec.l == base.l)
                .collect();
            let mut labels: Vec<&str> =
                partners.iter().filter_map(|rec| rec.quadric_label()).collect();
            labels.sort();
            labels.dedup();
            if partners.len() != 4 || labels != ["q1", "q2", "q3"] {
                problems.push(format!(
                    "(x, x⁹+1) partners: got {} trigonal over labels {:?}",
                    partners.len(),
                    labels
                ));
            }
        }
    }

    check(
        "8",
        "named example curves reproduced with their quoted invariants",
        problems.is_empty(),
        if problems.is_empty() { "all fixtures found".into() } else { problems.join("; ") },
    )
}

// ---------- property suites (criterion 9) ----------

/// 9a: field axioms and Artin–Schreier counts, exhaustive for k ≤ 4.
pub fn check_field_axioms() -> Check {
    let mut problems = Vec::new();
    for k in 1..=4u32 {
        let ctx = field_new(k).unwrap();
        let elems: Vec<_> = ctx.elements().collect();
        for &a in &elems {
            for &b in &elems {
                if ctx.mul(a, b) != ctx.mul(b, a) {
                    problems.push(format!("k={k}: commutativity fails"));
                }
                for &c in &elems {
                    if ctx.mul(a, ctx.mul(b, c)) != ctx.mul(ctx.mul(a, b), c) {
                        problems.push(format!("k={k}: associativity fails"));
                    }
                    if ctx.mul(a, ctx.add(b, c)) != ctx.add(ctx.mul(a, b), ctx.mul(a, c)) {
                        problems.push(format!("k={k}: distributivity fails"));
                    }
                }
                if !a.is_zero() && ctx.mul(a, ctx.inv(a)).bits() != 1 {
                    problems.push(format!("k={k}: inverse fails"));
                }
            }
            if ctx.mul(ctx.sqrt(a), ctx.sqrt(a)) != a {
                problems.push(format!("k={k}: sqrt fails"));
            }
        }
        for &b in &elems {
            for &c in &elems {
                let direct = elems
                    .iter()
                    .filter(|&&y| ctx.add(ctx.sqr(y), ctx.mul(b, y)) == c)
                    .count() as u32;
                if ctx.artin_schreier_count(b, c) != direct {
                    problems.push(format!("k={k}: Artin–Schreier count fails"));
                }
            }
        }
        if problems.len() > 4 {
            break;
        }
    }
    check(
        "9a",
        "field axioms and Artin–Schreier counts exhaustive for k ≤ 4",
        problems.is_empty(),
        if problems.is_empty() { "exhaustive pass".into() } else { problems.join("; ") },
    )
}

/// 9b: Möbius action law, exhaustive for weights ≤ 5.
pub fn check_action_law() -> Check {
    let mut ok = true;
    'outer: for n in 1..=5u32 {
        for &a in &crate::polyf2::pgl2_elements() {
            for &b in &crate::polyf2::pgl2_elements() {
                for mask in 1..1u64 << (n + 1) {
                    let q = PolyF2::new(mask);
                    let lhs = crate::polyf2::moebius_act(
                        n,
                        a,
                        crate::polyf2::moebius_act(n, b, q).unwrap(),
                    )
                    .unwrap();
                    let rhs = crate::polyf2::moebius_act(n, a.compose(b), q).unwrap();
                    if lhs != rhs {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    check("9b", "Möbius action law exhaustive for n ≤ 5", ok, String::new())
}

/// 9c: orbit–stabilizer products for polynomials and quadrics.
pub fn check_orbit_stabilizer() -> Check {
    let mut ok = true;
    for n in 1..=5u32 {
        for mask in 1..1u64 << (n + 1) {
            let (orbit, stab) = orbit_and_stabilizer(n, PolyF2::new(mask)).unwrap();
            if orbit.len() * stab.len() != 6 {
                ok = false;
            }
        }
    }
    for orbit in quad_classify_check() {
        let stab = stabilizer4(orbit.rep);
        if orbit.size * stab.len() != 20160 {
            ok = false;
        }
    }
    check("9c", "orbit–stabilizer products", ok, String::new())
}

// Bit-reversal of q as a degree-bound polynomial: Σ b_i x^(bound−i).
fn reverse_poly(p: PolyF2, bound: u32) -> PolyF2 {
    let mut out = 0u64;
    for i in 0..=bound {
        if p.coeff(i) == 1 {
            out |= 1 << (bound - i);
        }
    }
    PolyF2::new(out)
}

/// Independent smoothness oracle: search both affine charts of
/// y² + q(x)y = p(x) for singular points over GF(2^d), d ≤ 5.
fn has_singular_point(q: PolyF2, p: PolyF2) -> bool {
    let q_flip = reverse_poly(q, 5);
    let p_flip = reverse_poly(p, 10);
    for d in 1..=5u32 {
        let ctx = field_new(d).unwrap();
        for x in ctx.elements() {
            let (qv, pv) = (q.eval(&ctx, x), p.eval(&ctx, x));
            let (dqv, dpv) = (q.derivative().eval(&ctx, x), p.derivative().eval(&ctx, x));
            for y in ctx.elements() {
                let f = ctx.add(ctx.add(ctx.sqr(y), ctx.mul(qv, y)), pv);
                let fx = ctx.add(ctx.mul(dqv, y), dpv);
                if f.is_zero() && fx.is_zero() && qv.is_zero() {
                    return true;
                }
            }
        }
        // Points at infinity live at x = 0 of the flipped chart.
        let x0 = ctx.elem(0);
        let (qv, pv) = (q_flip.eval(&ctx, x0), p_flip.eval(&ctx, x0));
        let (dqv, dpv) = (
            q_flip.derivative().eval(&ctx, x0),
            p_flip.derivative().eval(&ctx, x0),
        );
        for y in ctx.elements() {
            let f = ctx.add(ctx.add(ctx.sqr(y), ctx.mul(qv, y)), pv);
            let fx = ctx.add(ctx.mul(dqv, y), dpv);
            if f.is_zero() && fx.is_zero() && qv.is_zero() {
                return true;
            }
        }
    }
    false
}

/// 9d: the hyperelliptic genus criterion agrees with the singular-point
/// search on every candidate (15 representatives × 2047 nonzero p-masks,
/// plus p = 0).
pub fn check_hyper_criterion_oracle() -> Check {
    let mut mismatches = 0usize;
    let mut example = String::new();
    for q in classify_deg_le(5) {
        for mask in 0u64..1 << 11 {
            let p = PolyF2::new(mask);
            let fast = hyper::genus4_check(q, p);
            let oracle = !has_singular_point(q, p);
            if fast != oracle {
                mismatches += 1;
                if example.is_empty() {
                    example = format!("q={q}, p={p}: criterion {fast}, search {oracle}");
                }
            }
        }
    }
    check(
        "9d",
        "genus criterion ≡ singular-point search on all candidates",
        mismatches == 0,
        if mismatches == 0 { "30720 candidates agree".into() } else {
            format!("{mismatches} mismatches; first: {example}")
        },
    )
}

/// 9e: verdict and counts are constant on isomorphism orbits (sampled).
pub fn check_orbit_constancy(r: &CensusResult) -> Check {
    let mut problems = Vec::new();
    // Hyperelliptic side: two representative q's, a stride of p-masks.
    let ctxs: Vec<_> = (1..=5).map(|k| field_new(k).unwrap()).collect();
    for qmask in [0b111u64, 0b10010] {
        let q = PolyF2::new(qmask);
        let (_, stab) = orbit_and_stabilizer(5, q).unwrap();
        for base in (0u64..1 << 11).step_by(171) {
            let base = PolyF2::new(base);
            let verdict = hyper::genus4_check(q, base);
            for member in hyper::p_orbit(q, &stab, base) {
                if hyper::genus4_check(q, member) != verdict {
                    problems.push(format!("hyp verdict differs within orbit of ({q}, {base})"));
                }
                if verdict {
                    for ctx in &ctxs {
                        if hyper::count_points(q, member, ctx)
                            != hyper::count_points(q, base, ctx)
                        {
                            problems.push(format!(
                                "hyp counts differ within orbit of ({q}, {base})"
                            ));
                        }
                    }
                }
            }
        }
    }
    // Trigonal side: every 120th accepted record, three orbit members.
    let trig_records: Vec<_> = r
        .records
        .iter()
        .filter_map(|rec| match rec.model {
            CurveModel::Trigonal { quadric, cubic } => Some((quadric, cubic, rec.n)),
            _ => None,
        })
        .collect();
    for (quadric, cubic_form, n) in trig_records.iter().step_by(120) {
        let q = quadric.form();
        let stab = stabilizer4(q);
        let orbit = cubic_orbit(q, &stab, *cubic_form);
        for member in orbit.iter().step_by((orbit.len() / 3).max(1)).take(3) {
            match trig::smooth_genus4(q, *member, 4) {
                Ok(true) => {}
                other => {
                    problems.push(format!(
                        "orbit member of ({}, {:05x}) not smooth: {:?}",
                        quadric.label(),
                        cubic_form.bits(),
                        other
                    ));
                    continue;
                }
            }
            for k in 1..=5u32 {
                if trig::count_points(q, *member, k) != n[(k - 1) as usize] {
                    problems.push(format!(
                        "orbit member of ({}, {:05x}) differs at N_{k}",
                        quadric.label(),
                        cubic_form.bits()
                    ));
                }
            }
        }
    }
    check(
        "9e",
        "verdict and counts constant on sampled isomorphism orbits",
        problems.is_empty(),
        if problems.is_empty() { "sampled orbits agree".into() } else { problems.join("; ") },
    )
}

/// 9f: the degree-count recurrence is integral and nonnegative on all rows.
pub fn check_a_recurrence(r: &CensusResult) -> Check {
    let mut ok = true;
    for rec in &r.records {
        match a_numbers(&rec.n) {
            Ok(a) => {
                if a != rec.a {
                    ok = false;
                }
            }
            Err(_) => ok = false,
        }
    }
    check("9f", "a_n recurrence integral on all records", ok, String::new())
}

/// 9g: counts_from_l inverts l_from_counts on every record, k = 1..4.
pub fn check_l_round_trip(r: &CensusResult) -> Check {
    let mut ok = true;
    for rec in &r.records {
        if !rec.l.satisfies_functional_equation() {
            ok = false;
        }
        for k in 1..=4u32 {
            if counts_from_l(&rec.l, k) != rec.n[(k - 1) as usize] {
                ok = false;
            }
        }
    }
    check("9g", "L round-trip identity on all records", ok, String::new())
}

/// 9h: N_5 predicted from L equals the directly counted N_5, on all records.
pub fn check_n5_consistency(r: &CensusResult) -> Check {
    let mut bad = 0;
    for rec in &r.records {
        if counts_from_l(&rec.l, 5) != rec.n[4] {
            bad += 1;
        }
    }
    check(
        "9h",
        "N_5 from L equals direct count over F_32 on all records",
        bad == 0,
        if bad == 0 { format!("{} records agree", r.records.len()) } else {
            format!("{bad} records disagree")
        },
    )
}

/// Criterion 10: runs with different worker counts emit identical bytes.
pub fn check_determinism(kmax: u32) -> Check {
    let run_with = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("pool");
        pool.install(|| {
            let result = census::run(CensusOptions {
                hyperelliptic: true,
                trigonal: true,
                kmax,
            })
            .expect("census");
            report::curves_jsonl(&result.records)
        })
    };
    let one = run_with(1);
    let two = run_with(2);
    check(
        "10",
        "byte-identical curves.jsonl across worker counts",
        one == two,
        format!("{} bytes each", one.len()),
    )
}

/// Database consistency: an existing curves.jsonl matches the recomputation.
pub fn check_database(r: &CensusResult, path: &Path) -> Check {
    let expected = report::curves_jsonl(&r.records);
    let got = std::fs::read_to_string(path);
    let (pass, detail) = match got {
        Err(e) => (false, format!("cannot read {}: {e}", path.display())),
        Ok(text) if text == expected => (true, format!("{} rows match", r.records.len())),
        Ok(text) => {
            let diff_line = expected
                .lines()
                .zip(text.lines())
                .position(|(a, b)| a != b)
                .map(|i| i + 1)
                .unwrap_or_else(|| expected.lines().count().min(text.lines().count()) + 1);
            (false, format!("first difference at line {diff_line}"))
        }
    };
    check("db", "curves.jsonl matches recomputation", pass, detail)
}

/// The full suite in criterion order. `db` adds the database-consistency
/// check when a curves.jsonl is supplied.
pub fn run_all(result: &CensusResult, kmax: u32, db: Option<&Path>) -> Vec<Check> {
    let mut checks = vec![
        check_hyp_count(result),
        check_trig_total(result),
        check_iso_classes(result),
        check_tables(result),
        check_multiplicity(result),
        check_q_classification(),
        check_quadric_classification(),
        check_fixtures(result),
        check_field_axioms(),
        check_action_law(),
        check_orbit_stabilizer(),
        check_hyper_criterion_oracle(),
        check_orbit_constancy(result),
        check_a_recurrence(result),
        check_l_round_trip(result),
        check_n5_consistency(result),
        check_determinism(kmax),
    ];
    if let Some(path) = db {
        checks.push(check_database(result, path));
    }
    checks
}
