//! The acceptance table: eleven end-to-end checks, each with a time budget.
//!
//! Every check builds its own inputs, so the checks are independent of one
//! another and of their order. A check passes only when its property holds
//! and it finished within budget.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::brute::{connected_cubic_graphs, oracle_labeling};
use crate::complex::{build_from_lines, SphereComplex};
use crate::duals::{affine_complex, affine_dual, spherical_dual};
use crate::error::Result;
use crate::families::{family_r, family_r_odd, near_pencil, weight23_graph};
use crate::geom::HomCoord;
use crate::graph::named::{cycle, prism};
use crate::graph::LabeledGraph;
use crate::partialcube::{are_isomorphic, is_cubic, is_partial_cube, is_planar, verify_labeling};
use crate::tiling::{glue, same_outline, Transform, ZonotopalTiling};
use crate::zonohedron::zonohedron_skeleton;

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<28} {:>7} ms / {:>6} ms  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.budget_ms,
            self.detail
        )
    }
}

type Check = fn(u64) -> Result<(bool, String)>;

/// `(id, name, budget, check)` for every criterion.
pub const CRITERIA: [(usize, &str, Duration, Check); 11] = [
    (1, "family counts", Duration::from_secs(10), family_counts),
    (2, "vertices = 2 x triangles", Duration::from_secs(5), vertex_doubling),
    (3, "affine duals are cubes", Duration::from_secs(60), random_affine_duals),
    (4, "cubic planar partial cubes", Duration::from_secs(30), cubic_planar),
    (5, "near-pencils are prisms", Duration::from_secs(5), near_pencil_prisms),
    (6, "weight 2/3 graph", Duration::from_secs(1), weight23),
    (7, "reflected glue = closure", Duration::from_secs(30), reflected_glue),
    (8, "distinct families", Duration::from_secs(60), distinctness),
    (9, "rotated and failing glues", Duration::from_secs(300), glue_properties),
    (10, "zonohedron duality", Duration::from_secs(30), zonohedron_duality),
    (11, "oracle agreement", Duration::from_secs(300), oracle_agreement),
];

/// Runs one criterion by id (1-based).
pub fn run_criterion(id: usize, seed: u64) -> Option<CriterionResult> {
    let &(id, name, budget, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = check(seed);
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let in_time = elapsed <= budget;
    let detail = if ok && !in_time { format!("{detail}; over budget") } else { detail };
    Some(CriterionResult {
        id,
        name,
        passed: ok && in_time,
        detail,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: budget.as_millis(),
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0, seed)).collect()
}

fn hc(x: i64, y: i64, z: i64) -> HomCoord {
    HomCoord::from_i64(x, y, z).expect("nonzero constant")
}

/// The generated simplicial arrangements: near-pencils for `n = 3..=8` and
/// the `R` family members used by the count check.
pub fn generated_complexes() -> Result<Vec<(String, SphereComplex)>> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push((format!("near-pencil:{n}"), near_pencil(n)?));
    }
    for m in r_members() {
        let c = if m % 2 == 0 { family_r(m)? } else { family_r_odd(m)? };
        out.push((format!("R:{m}"), c));
    }
    Ok(out)
}

fn r_members() -> Vec<usize> {
    let mut ms: Vec<usize> = (1..=5).map(|k| 4 * k + 2).collect();
    ms.extend((2..=5).map(|k| 4 * k));
    ms.extend((2..=5).map(|k| 4 * k + 1));
    ms
}

fn family_counts(_: u64) -> Result<(bool, String)> {
    for m in r_members() {
        let (c, vertices) = match m % 4 {
            2 => (family_r(m)?, 4 * (m / 4 + 1) * (2 * (m / 4) + 1)),
            0 => (family_r(m)?, m * (m / 2 + 1)),
            _ => (family_r_odd(m)?, 8 * (m / 4) * (m / 4 + 1)),
        };
        let g = spherical_dual(&c);
        let classes = is_partial_cube(&g)?.class_count();
        if g.vertex_count() != vertices || classes != Some(m) {
            return Ok((false, format!("R({m}): {} vertices, {classes:?} classes; expected {vertices}, {m}", g.vertex_count())));
        }
    }
    Ok((true, format!("{} members of R match the vertex and class formulas", r_members().len())))
}

fn vertex_doubling(_: u64) -> Result<(bool, String)> {
    let all = generated_complexes()?;
    for (name, c) in &all {
        let triangles = c.triangle_count_projective()?;
        let v = spherical_dual(c).vertex_count();
        if v != 2 * triangles {
            return Ok((false, format!("{name}: {v} vertices, {triangles} triangles")));
        }
    }
    Ok((true, format!("{} simplicial complexes", all.len())))
}

/// A random affine arrangement of `3..=7` distinct lines with small integer
/// coefficients; parallel and concurrent lines are allowed.
pub fn random_affine_arrangement(rng: &mut StdRng) -> Vec<HomCoord> {
    let n = rng.gen_range(3..=7);
    let mut lines: Vec<HomCoord> = Vec::with_capacity(n);
    while lines.len() < n {
        let (a, b, c) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4), rng.gen_range(-4..=4));
        if a == 0 && b == 0 {
            continue;
        }
        let h = hc(a, b, c);
        if lines.iter().all(|l| !l.projectively_equal(&h)) {
            lines.push(h);
        }
    }
    lines
}

fn random_affine_duals(seed: u64) -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut vertices = 0;
    for trial in 0..100 {
        let lines = random_affine_arrangement(&mut rng);
        let g = affine_dual(&lines)?;
        let labels = g.labels.as_ref().expect("dual graphs are labeled");
        if !verify_labeling(&g, labels)? || !is_partial_cube(&g)?.is_partial_cube() {
            return Ok((false, format!("trial {trial}: distances differ from label distances")));
        }
        vertices += g.vertex_count();
    }
    Ok((true, format!("100 arrangements, {vertices} cells in total, seed {seed}")))
}

fn cubic_planar(_: u64) -> Result<(bool, String)> {
    let all = generated_complexes()?;
    for (name, c) in &all {
        let g = spherical_dual(c);
        if !is_partial_cube(&g)?.is_partial_cube() || !is_cubic(&g) || !is_planar(&g) {
            return Ok((false, format!("{name} fails")));
        }
    }
    Ok((true, format!("{} duals are cubic, planar partial cubes", all.len())))
}

fn near_pencil_prisms(_: u64) -> Result<(bool, String)> {
    for n in 3..=8 {
        let g = spherical_dual(&near_pencil(n)?);
        if !are_isomorphic(&g, &prism(2 * (n - 1)), 200)? {
            return Ok((false, format!("near-pencil({n}) is not the {}-prism", 2 * (n - 1))));
        }
    }
    Ok((true, "n = 3..8".into()))
}

fn weight23(_: u64) -> Result<(bool, String)> {
    let g = weight23_graph();
    let r = is_partial_cube(&g)?;
    let ok = g.vertex_count() == 20 && is_cubic(&g) && r.is_partial_cube() && !is_planar(&g);
    Ok((ok, format!("{} vertices, {} classes, planar {}", g.vertex_count(), r.class_count().unwrap_or(0), is_planar(&g))))
}

/// Affine arrangements whose projective closures are simplicial.
pub fn simplicial_affine_instances() -> Vec<(&'static str, Vec<HomCoord>)> {
    vec![
        ("pencil of 3 (near-pencil 4)", vec![hc(1, 0, 0), hc(0, 1, 0), hc(1, 1, 0)]),
        (
            "pencil of 5 (near-pencil 6)",
            vec![hc(1, 0, 0), hc(0, 1, 0), hc(1, 1, 0), hc(1, -1, 0), hc(1, -2, 0)],
        ),
        ("3 parallels and a transversal (near-pencil 5)", vec![hc(1, 0, 0), hc(1, 0, -1), hc(1, 0, -2), hc(0, 1, 0)]),
        // R(6) with one of its lines sent to infinity
        ("R(6) affine part", vec![hc(0, 1, 0), hc(-6, 1, 1), hc(0, -1, 1), hc(-6, 2, 1), hc(-6, 1, 2)]),
        ("R(8) (closure R(9))", square_arrangement()),
    ]
}

/// Sides and symmetry axes of the square `[-1, 1]^2`, a rational `R(8)`.
pub fn square_arrangement() -> Vec<HomCoord> {
    vec![hc(1, 0, -1), hc(1, 0, 1), hc(0, 1, -1), hc(0, 1, 1), hc(1, 0, 0), hc(0, 1, 0), hc(1, -1, 0), hc(1, 1, 0)]
}

fn reflected_glue(_: u64) -> Result<(bool, String)> {
    let instances = simplicial_affine_instances();
    for (name, lines) in &instances {
        let closure = affine_complex(lines)?;
        if !closure.is_simplicial() {
            return Ok((false, format!("{name}: closure is not simplicial")));
        }
        let t = ZonotopalTiling::from_affine_arrangement(lines)?;
        let g = glue(&t, &t, Transform::Reflect)?;
        if !are_isomorphic(&g.graph, &spherical_dual(&closure), 1000)? {
            return Ok((false, format!("{name}: glued graph differs from the closure dual")));
        }
    }
    Ok((true, format!("{} simplicial instances", instances.len())))
}

fn distinctness(_: u64) -> Result<(bool, String)> {
    let graphs: Vec<(String, LabeledGraph)> = generated_complexes()?
        .into_iter()
        .map(|(name, c)| (name, spherical_dual(&c)))
        .filter(|(_, g)| g.vertex_count() <= 200)
        .collect();
    let mut compared = 0;
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            let (a, b) = (&graphs[i], &graphs[j]);
            if a.1.vertex_count() != b.1.vertex_count() {
                continue;
            }
            compared += 1;
            if are_isomorphic(&a.1, &b.1, 200)? {
                return Ok((false, format!("{} and {} are isomorphic", a.0, b.0)));
            }
        }
    }
    Ok((true, format!("{} graphs, {compared} same-order pairs compared", graphs.len())))
}

fn glue_properties(_: u64) -> Result<(bool, String)> {
    let lines = square_arrangement();
    let t = ZonotopalTiling::from_affine_arrangement(&lines)?;
    let g = glue(&t, &t, Transform::Rotate90)?;
    let rotated_ok = affine_complex(&lines)?.is_simplicial()
        && g.overlay_zonotopal
        && is_cubic(&g.graph)
        && is_partial_cube(&g.graph)?.is_partial_cube();
    if !rotated_ok {
        return Ok((false, "square arrangement glued to its quarter turn is not a partial cube".into()));
    }
    match find_failing_glue()? {
        Some(w) => Ok((true, format!("quarter turn ok; failing pair {w}"))),
        None => Ok((false, "quarter turn ok; no failing pair found".into())),
    }
}

/// Searches tilings of one zonogon (two vertical lines, one horizontal, one
/// diagonal, at small offsets) for a pair whose reflected glue has a
/// non-zonotopal overlay and is not a partial cube.
pub fn find_failing_glue() -> Result<Option<String>> {
    let offsets = -2..=2i64;
    let mut tilings: Vec<(Vec<HomCoord>, ZonotopalTiling)> = Vec::new();
    for a in offsets.clone() {
        for b in a + 1..=2 {
            for c in offsets.clone() {
                for d in offsets.clone() {
                    let lines = vec![hc(1, 0, a), hc(1, 0, b), hc(0, 1, c), hc(1, 1, d)];
                    tilings.push((lines.clone(), ZonotopalTiling::from_affine_arrangement(&lines)?));
                }
            }
        }
    }
    let mut groups: BTreeMap<Vec<_>, Vec<usize>> = BTreeMap::new();
    for (i, (_, t)) in tilings.iter().enumerate() {
        groups.entry(t.subdivision.centered_outline()).or_default().push(i);
    }
    for members in groups.values() {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k..] {
                let (t1, t2) = (&tilings[i].1, &tilings[j].1);
                if !same_outline(&t1.subdivision, &t2.reflect().subdivision) {
                    continue;
                }
                let g = glue(t1, t2, Transform::Reflect)?;
                if !g.overlay_zonotopal && !is_partial_cube(&g.graph)?.is_partial_cube() {
                    let show = |ls: &[HomCoord]| ls.iter().map(|l| format!("({l})")).collect::<Vec<_>>().join(" ");
                    return Ok(Some(format!("{} | {}", show(&tilings[i].0), show(&tilings[j].0))));
                }
            }
        }
    }
    Ok(None)
}

/// Rational arrangements combinatorially equal to `R(6)` and `R(8)`.
pub fn rational_r6_r8() -> [(&'static str, Vec<HomCoord>); 2] {
    let mut r6 = simplicial_affine_instances().swap_remove(3).1;
    r6.push(hc(0, 0, 1));
    [("R(6)", r6), ("R(8)", square_arrangement())]
}

/// Random arrangements of `4..=6` lines in general enough position for a
/// solid zonohedron.
pub fn random_projective_arrangement(rng: &mut StdRng) -> Vec<HomCoord> {
    loop {
        let n = rng.gen_range(4..=6);
        let mut lines: Vec<HomCoord> = Vec::with_capacity(n);
        while lines.len() < n {
            let v = [rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
            if v == [0, 0, 0] {
                continue;
            }
            let h = hc(v[0], v[1], v[2]);
            if lines.iter().all(|l| !l.projectively_equal(&h)) {
                lines.push(h);
            }
        }
        if build_from_lines(&lines).is_ok_and(|c| !c.is_pencil()) {
            return lines;
        }
    }
}

fn zonohedron_duality(seed: u64) -> Result<(bool, String)> {
    let [r6, r8] = rational_r6_r8();
    for ((name, lines), reference) in [(r6, family_r(6)?), (r8, family_r(8)?)] {
        let d = spherical_dual(&build_from_lines(&lines)?);
        if !are_isomorphic(&d, &spherical_dual(&reference), 200)? {
            return Ok((false, format!("{name}: rational model differs from the polygon construction")));
        }
        if !are_isomorphic(&zonohedron_skeleton(&lines)?.graph, &d, 200)? {
            return Ok((false, format!("{name}: skeleton differs from the dual")));
        }
    }
    let mut rng = StdRng::seed_from_u64(seed ^ 10);
    for trial in 0..5 {
        let lines = random_projective_arrangement(&mut rng);
        let d = spherical_dual(&build_from_lines(&lines)?);
        if !are_isomorphic(&zonohedron_skeleton(&lines)?.graph, &d, 500)? {
            return Ok((false, format!("random trial {trial}: skeleton differs from the dual")));
        }
    }
    Ok((true, format!("R(6), R(8) and 5 random arrangements, seed {seed}")))
}

fn oracle_agreement(_: u64) -> Result<(bool, String)> {
    let mut corpus: Vec<LabeledGraph> = Vec::new();
    for n in (4..=12).step_by(2) {
        corpus.extend(connected_cubic_graphs(n));
    }
    let cubic = corpus.len();
    corpus.extend((3..=12).map(cycle));
    let mut partial = 0;
    for (i, g) in corpus.iter().enumerate() {
        let fast = is_partial_cube(g)?;
        let slow = oracle_labeling(g)?;
        if fast.is_partial_cube() != slow.is_some() {
            return Ok((false, format!("graph {i}: recognizer {} oracle {}", fast.is_partial_cube(), slow.is_some())));
        }
        if let (Some(a), Some(b)) = (fast.labels(), slow) {
            if a[0].len() != b[0].len() || !verify_labeling(g, a)? {
                return Ok((false, format!("graph {i}: labelings disagree")));
            }
            partial += 1;
        }
    }
    Ok((true, format!("{cubic} cubic graphs and 10 cycles, {partial} partial cubes")))
}
