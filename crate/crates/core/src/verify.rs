//! Triangle counts and C4 checks for `G_q(a)`.
//!
//! Every triangle of `G_q(a)` has one vertex per part, and translating all
//! three vertices by the same `(t, s)` maps triangles to triangles. A
//! triangle is therefore fixed by its A-vertex and a pair `(z1, z2)` of
//! nonzero steps with `z3 = -z1 - z2` nonzero and
//! `c_f z1^e + c_g z2^e + c_h z3^e = 0`, giving `q^6` times the number of
//! such pairs.

use alloc::collections::BTreeMap;
use core::ops::Range;

use crate::construction::{ExplicitTripartite, GraphSpec, Layer, Part};
use crate::error::{Error, Result};
use crate::fa::fa_poly;
use crate::gf::FieldCtx;
use crate::planar::{char3_exponent, is_planar_table, predict_monomial_char3, PlanarReport};

/// Pairs `(z1, z2)` with `z1` restricted to an encoding range.
pub fn count_pair_solutions_range(spec: &GraphSpec<'_>, z1_range: Range<u64>) -> u64 {
    let f = spec.field();
    let order = f.order();
    let mut count = 0;
    for i in z1_range.start.max(1)..z1_range.end.min(order) {
        let z1 = f.decode(i).expect("in range");
        let t1 = spec.shift_value(Layer::AB, &z1);
        for z2 in f.units() {
            let z3 = f.neg(&f.add(&z1, &z2));
            if z3.is_zero() {
                continue;
            }
            let sum = f.add(
                &f.add(&t1, &spec.shift_value(Layer::BC, &z2)),
                &spec.shift_value(Layer::CA, &z3),
            );
            count += sum.is_zero() as u64;
        }
    }
    count
}

/// All solution pairs, by exhaustive `O(q^6)` scan.
pub fn count_pair_solutions_bruteforce(spec: &GraphSpec<'_>) -> u64 {
    count_pair_solutions_range(spec, 0..spec.field().order())
}

/// Pair count predicted by the roots of `f_a`: every root `r` outside
/// `{0, -1}` gives the pairs `(r z2, z2)`. Only meaningful for `e = q + 1`.
pub fn pair_count_from_roots(spec: &GraphSpec<'_>) -> Result<u64> {
    let f = spec.field();
    if spec.exponent() != spec.q() + 1 {
        return Err(Error::BadParams("root structure applies to X^(q+1) only"));
    }
    let roots = fa_poly(f, &spec.a())?.roots_with_multiplicity()?;
    let minus_one = f.from_int(-1);
    let usable = roots
        .iter()
        .filter(|(r, _)| !r.is_zero() && *r != minus_one)
        .count() as u64;
    Ok(usable * (f.order() - 1))
}

/// `q^6` times a pair count already computed by brute force, after checking
/// it against the root structure of `f_a`.
pub fn count_triangles_symbolic_with(spec: &GraphSpec<'_>, bruteforce: u64) -> Result<u64> {
    let from_roots = pair_count_from_roots(spec)?;
    if from_roots != bruteforce {
        return Err(Error::InconsistentCounts {
            bruteforce,
            from_roots,
        });
    }
    Ok(spec.part_size() * bruteforce)
}

pub fn count_triangles_symbolic(spec: &GraphSpec<'_>) -> Result<u64> {
    count_triangles_symbolic_with(spec, count_pair_solutions_bruteforce(spec))
}

/// Walks A -> B and A -> C neighbourhoods of every A-vertex and tests each
/// B-C pair with [`GraphSpec::adjacent`]. Refuses anything beyond `q = 3`.
pub fn count_triangles_bruteforce(spec: &GraphSpec<'_>) -> Result<u64> {
    if spec.field().order() > 27 {
        return Err(Error::TooLarge);
    }
    let mut count = 0;
    for idx in 0..spec.part_size() {
        let a = spec.vertex_at(Part::A, idx)?;
        let cs: alloc::vec::Vec<_> = spec.neighbors(&a, Part::C)?.collect();
        for b in spec.neighbors(&a, Part::B)? {
            for c in &cs {
                count += spec.adjacent(&b, c)? as u64;
            }
        }
    }
    Ok(count)
}

/// Triangles of an explicit 3-partite graph.
pub fn count_triangles_explicit(g: &ExplicitTripartite) -> u64 {
    let mut count = 0;
    for (a, bs) in g.layers[Layer::AB.index()].iter().enumerate() {
        for &b in bs {
            for &c in &g.layers[Layer::BC.index()][b as usize] {
                count += g.has_edge(Layer::CA, c, a as u32) as u64;
            }
        }
    }
    count
}

/// Two source vertices sharing two targets in one layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C4Witness {
    pub layer: Layer,
    pub sources: (u32, u32),
    pub targets: (u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C4Status {
    Clean,
    Violation(C4Witness),
    /// The planarity route could not certify this layer.
    NotEstablished(PlanarReport),
}

impl C4Status {
    pub fn is_clean(&self) -> bool {
        matches!(self, C4Status::Clean)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum C4Method {
    Direct,
    Planarity,
}

/// Records every pair of targets seen from each source; the first repeat is
/// a 4-cycle.
pub fn check_c4_free_direct(g: &ExplicitTripartite, layer: Layer) -> C4Status {
    let mut seen: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for (src, targets) in g.layers[layer.index()].iter().enumerate() {
        for (i, &t1) in targets.iter().enumerate() {
            for &t2 in &targets[i + 1..] {
                let key = (t1.min(t2), t1.max(t2));
                if let Some(&other) = seen.get(&key) {
                    return C4Status::Violation(C4Witness {
                        layer,
                        sources: (other, src as u32),
                        targets: key,
                    });
                }
                seen.insert(key, src as u32);
            }
        }
    }
    C4Status::Clean
}

/// Direct check on a materialized `G_q(a)`, only for `q = 3`.
pub fn check_c4_free_direct_spec(spec: &GraphSpec<'_>) -> Result<[C4Status; 3]> {
    if spec.field().order() > 27 {
        return Err(Error::TooLarge);
    }
    let g = spec.materialize()?;
    Ok(Layer::ALL.map(|l| check_c4_free_direct(&g, l)))
}

/// Each layer is C4-free when `c X^e` is planar.
pub fn check_c4_free_via_planarity(spec: &GraphSpec<'_>) -> [C4Status; 3] {
    let f = spec.field();
    Layer::ALL.map(|layer| {
        let values: alloc::vec::Vec<_> =
            f.elements().map(|z| spec.shift_value(layer, &z)).collect();
        let report = is_planar_table(f, &values);
        if report.is_planar {
            C4Status::Clean
        } else {
            C4Status::NotEstablished(report)
        }
    })
}

/// `q^6 (q^3 - 1)(q + 1)`.
pub fn lower_bound(q: u64) -> u64 {
    q.pow(6) * (q.pow(3) - 1) * (q + 1)
}

/// Reference values for one `q`. Curves are evaluated at `k = q^6` exactly:
/// `k^{3/2} = q^9`, `k^{5/3} = q^{10}`, `k^{7/4} = q^{10.5}` (floored).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundsRow {
    pub q: u64,
    pub k: u64,
    /// `q^2 + q + 1`, the part size of the projective baseline.
    pub baseline_k: u64,
    /// `(q + 1)(q^2 + q + 1)`.
    pub baseline_triangles: u64,
    pub lower_bound: u64,
    pub k_pow_3_2: u128,
    pub k_pow_5_3: u128,
    pub k_pow_7_4_floor: u128,
}

/// Supports odd prime powers `3 <= q <= 67`, where `q^21` fits in `u128`.
pub fn bounds_report(q: u64) -> Result<BoundsRow> {
    let odd = crate::gf::prime_power(q).is_some_and(|(p, _)| p != 2);
    if !odd || !(3..=67).contains(&q) {
        return Err(Error::BadOrder(q));
    }
    let qq = q as u128;
    Ok(BoundsRow {
        q,
        k: q.pow(6),
        baseline_k: q * q + q + 1,
        baseline_triangles: (q + 1) * (q * q + q + 1),
        lower_bound: lower_bound(q),
        k_pow_3_2: qq.pow(9),
        k_pow_5_3: qq.pow(10),
        k_pow_7_4_floor: isqrt(qq.pow(21)),
    })
}

pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = x.div_ceil(2);
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCount {
    pub q: u64,
    pub a: u64,
    pub exponent: u64,
    pub pair_solutions: u64,
    pub triangles: u64,
}

/// Replaces `X^{q+1}` by `X^{(3^alpha + 1)/2}` in `G_q(a)` with the same
/// coefficients and counts solution pairs by brute force.
pub fn experiment_alt_monomial(field: &FieldCtx, alpha: u32) -> Result<PairCount> {
    let spec = alt_monomial_spec(field, alpha)?;
    Ok(pair_count_record(
        &spec,
        count_pair_solutions_bruteforce(&spec),
    ))
}

/// The graph used by [`experiment_alt_monomial`], with the selected `a`.
pub fn alt_monomial_spec(field: &FieldCtx, alpha: u32) -> Result<GraphSpec<'_>> {
    if field.characteristic() != 3 {
        return Err(Error::BadCharacteristic(field.characteristic()));
    }
    if !predict_monomial_char3(alpha, field.degree() as u32)? {
        return Err(Error::NotPlanar);
    }
    let a = crate::construction::select_parameter(field)?;
    GraphSpec::with_exponent(field, &a, char3_exponent(alpha)?)
}

pub fn pair_count_record(spec: &GraphSpec<'_>, pairs: u64) -> PairCount {
    PairCount {
        q: spec.q(),
        a: spec.field().encode(&spec.a()),
        exponent: spec.exponent(),
        pair_solutions: pairs,
        triangles: pairs * spec.part_size(),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub direct_c4: bool,
    pub bruteforce_triangles: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub q: u64,
    pub a: u64,
    pub c4: [(Layer, C4Method, C4Status); 3],
    pub triangle_count_symbolic: u64,
    pub triangle_count_oracle: Option<u64>,
    pub pair_solution_count: u64,
    pub lower_bound: u64,
    pub pass: bool,
}

pub fn verify(spec: &GraphSpec<'_>, opts: &VerifyOptions) -> Result<VerifyReport> {
    verify_with_pairs(spec, opts, count_pair_solutions_bruteforce(spec))
}

/// [`verify`] with the brute-force pair count supplied by the caller.
pub fn verify_with_pairs(
    spec: &GraphSpec<'_>,
    opts: &VerifyOptions,
    pairs: u64,
) -> Result<VerifyReport> {
    let statuses = if opts.direct_c4 {
        check_c4_free_direct_spec(spec)?.map(|s| (C4Method::Direct, s))
    } else {
        check_c4_free_via_planarity(spec).map(|s| (C4Method::Planarity, s))
    };
    let oracle = if opts.bruteforce_triangles {
        Some(count_triangles_bruteforce(spec)?)
    } else {
        None
    };
    let symbolic = count_triangles_symbolic_with(spec, pairs)?;
    let bound = lower_bound(spec.q());
    let c4 = [0, 1, 2].map(|i| (Layer::ALL[i], statuses[i].0, statuses[i].1.clone()));
    let pass = symbolic >= bound
        && oracle.is_none_or(|o| o == symbolic)
        && c4.iter().all(|(_, _, s)| s.is_clean());
    Ok(VerifyReport {
        q: spec.q(),
        a: spec.field().encode(&spec.a()),
        c4,
        triangle_count_symbolic: symbolic,
        triangle_count_oracle: oracle,
        pair_solution_count: pairs,
        lower_bound: bound,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::baseline_projective;

    #[test]
    fn pair_count_q3() {
        let f = FieldCtx::cubic_extension(3).unwrap();
        let spec = GraphSpec::default_for(&f).unwrap();
        assert_eq!(count_pair_solutions_bruteforce(&spec), 104);
        assert_eq!(pair_count_from_roots(&spec).unwrap(), 104);
        assert_eq!(count_triangles_symbolic(&spec).unwrap(), 75_816);
    }

    #[test]
    fn range_partition_sums() {
        let f = FieldCtx::cubic_extension(3).unwrap();
        let spec = GraphSpec::default_for(&f).unwrap();
        let parts: u64 = [0..5, 5..13, 13..27]
            .into_iter()
            .map(|r| count_pair_solutions_range(&spec, r))
            .sum();
        assert_eq!(parts, 104);
    }

    #[test]
    fn explicit_counts_on_baseline() {
        let g2 = baseline_projective(2).unwrap();
        assert_eq!(count_triangles_explicit(&g2), 21);
        assert!(check_c4_free_direct(&g2, Layer::AB).is_clean());
        let g3 = baseline_projective(3).unwrap();
        assert_eq!(count_triangles_explicit(&g3), 52);
    }

    #[test]
    fn k22_is_detected() {
        let mut g = ExplicitTripartite::empty(2);
        for s in 0..2 {
            for t in 0..2 {
                g.add_edge(Layer::AB, s, t);
            }
        }
        assert_eq!(
            check_c4_free_direct(&g, Layer::AB),
            C4Status::Violation(C4Witness {
                layer: Layer::AB,
                sources: (0, 1),
                targets: (0, 1)
            })
        );
        assert!(check_c4_free_direct(&g, Layer::BC).is_clean());
    }

    #[test]
    fn bounds_row_q3() {
        let row = bounds_report(3).unwrap();
        assert_eq!(row.k, 729);
        assert_eq!(row.lower_bound, 75_816);
        assert_eq!(row.k_pow_3_2, 19_683);
        assert_eq!(row.k_pow_5_3, 59_049);
        assert_eq!(row.k_pow_7_4_floor, 102_275);
        assert_eq!(row.baseline_triangles, 52);
        assert_eq!(bounds_report(2).unwrap_err(), Error::BadOrder(2));
        assert_eq!(bounds_report(15).unwrap_err(), Error::BadOrder(15));
    }

    #[test]
    fn isqrt_small() {
        for n in 0u128..2000 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
    }

    #[test]
    fn alt_monomial_guards() {
        let f5 = FieldCtx::cubic_extension(5).unwrap();
        assert_eq!(
            experiment_alt_monomial(&f5, 1).unwrap_err(),
            Error::BadCharacteristic(5)
        );
        let f27 = FieldCtx::cubic_extension(3).unwrap();
        assert_eq!(
            experiment_alt_monomial(&f27, 3).unwrap_err(),
            Error::NotPlanar
        );
        let rec = experiment_alt_monomial(&f27, 1).unwrap();
        assert_eq!(rec.exponent, 2);
        assert_eq!(rec.triangles, rec.pair_solutions * 729);
    }

    #[test]
    fn brute_force_guard() {
        let f = FieldCtx::cubic_extension(5).unwrap();
        let spec = GraphSpec::default_for(&f).unwrap();
        assert_eq!(count_triangles_bruteforce(&spec), Err(Error::TooLarge));
        assert_eq!(
            check_c4_free_direct_spec(&spec).unwrap_err(),
            Error::TooLarge
        );
    }
}
