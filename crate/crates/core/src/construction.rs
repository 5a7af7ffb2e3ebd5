//! The tripartite graph `G_q(a)` on three copies of `F_{q^3} x F_{q^3}`, and
//! the projective-plane baseline.
//!
//! `G_q(a)` is never stored. Adjacency between consecutive parts is
//! `(x, y) ~ (x + z, y + c z^e)` for nonzero `z`, where `e = q + 1` and `c` is
//! the layer coefficient:
//!
//! | layer  | coefficient                            |
//! |--------|----------------------------------------|
//! | A -> B | `a - 1`                                |
//! | B -> C | `a N(a^{-1}) (Tr(a) - 2a) - 1`         |
//! | C -> A | `1`                                    |

use alloc::vec::Vec;

use crate::error::{ConstraintViolation, Error, Result};
use crate::fa::fa_constant;
use crate::gf::{FieldCtx, FieldElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    A,
    B,
    C,
}

impl Part {
    pub fn letter(self) -> char {
        match self {
            Part::A => 'A',
            Part::B => 'B',
            Part::C => 'C',
        }
    }
}

/// One of the three bipartite layers, named by its forward direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    AB,
    BC,
    CA,
}

impl Layer {
    pub const ALL: [Layer; 3] = [Layer::AB, Layer::BC, Layer::CA];

    pub fn parts(self) -> (Part, Part) {
        match self {
            Layer::AB => (Part::A, Part::B),
            Layer::BC => (Part::B, Part::C),
            Layer::CA => (Part::C, Part::A),
        }
    }

    /// The layer joining two parts, with `true` when `from -> to` is the
    /// forward direction.
    pub fn between(from: Part, to: Part) -> Result<(Layer, bool)> {
        Layer::ALL
            .iter()
            .find_map(|&l| match l.parts() {
                (s, t) if (s, t) == (from, to) => Some((l, true)),
                (s, t) if (t, s) == (from, to) => Some((l, false)),
                _ => None,
            })
            .ok_or(if from == to {
                Error::SamePart
            } else {
                Error::BadPartPair
            })
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Layer::AB => "AB",
            Layer::BC => "BC",
            Layer::CA => "CA",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub part: Part,
    pub x: FieldElem,
    pub y: FieldElem,
}

/// Checks whether `a` is usable: outside `F_q`, with nonzero `g` coefficient
/// and `f_a(-1) != 0`.
pub fn constraint_check(field: &FieldCtx, a: &FieldElem) -> Result<(), ConstraintViolation> {
    let in_sub = field
        .in_subfield(a)
        .map_err(|_| ConstraintViolation::SubfieldElement)?;
    if a.is_zero() || in_sub {
        return Err(ConstraintViolation::SubfieldElement);
    }
    let constant = fa_constant(field, a).map_err(|_| ConstraintViolation::SubfieldElement)?;
    if g_coefficient(field, a, &constant).is_zero() {
        return Err(ConstraintViolation::ConstraintEqZero);
    }
    // f_a(-1) = 1 - 2 a^{-1} + constant, since q + 1 is even
    let a_inv = field.inv(a).expect("nonzero");
    let at_minus_one = field.add(&field.sub(&field.one(), &field.scale(2, &a_inv)), &constant);
    if at_minus_one.is_zero() {
        return Err(ConstraintViolation::MinusOneIsRoot);
    }
    Ok(())
}

fn g_coefficient(field: &FieldCtx, a: &FieldElem, fa_const: &FieldElem) -> FieldElem {
    field.sub(&field.mul(a, fa_const), &field.one())
}

/// The usable `a` with the smallest encoding.
pub fn select_parameter(field: &FieldCtx) -> Result<FieldElem> {
    let q = field.subfield_order().ok_or(Error::NoTower)?;
    if q < 3 {
        return Err(Error::BadOrder(q));
    }
    field
        .units()
        .find(|a| constraint_check(field, a).is_ok())
        .ok_or(Error::NoValidParameter)
}

/// Everything needed to answer adjacency queries in `G_q(a)`.
#[derive(Clone, Debug)]
pub struct GraphSpec<'f> {
    field: &'f FieldCtx,
    q: u64,
    a: FieldElem,
    exponent: u64,
    coeffs: [FieldElem; 3],
    /// `z^exponent`, indexed by encoding of `z`.
    powers: Vec<FieldElem>,
}

impl<'f> GraphSpec<'f> {
    /// `G_q(a)` with the monomial `X^{q+1}`.
    pub fn new(field: &'f FieldCtx, a: &FieldElem) -> Result<Self> {
        let q = field.subfield_order().ok_or(Error::NoTower)?;
        Self::with_exponent(field, a, q + 1)
    }

    /// The same coefficient scheme applied to `X^{exponent}`.
    pub fn with_exponent(field: &'f FieldCtx, a: &FieldElem, exponent: u64) -> Result<Self> {
        let q = field.subfield_order().ok_or(Error::NoTower)?;
        if !field.contains(a) {
            return Err(Error::CtxMismatch);
        }
        constraint_check(field, a).map_err(Error::InvalidParameter)?;
        let constant = fa_constant(field, a)?;
        let cf = field.sub(a, &field.one());
        let cg = g_coefficient(field, a, &constant);
        let ch = field.one();
        let powers = field.elements().map(|z| field.pow(&z, exponent)).collect();
        Ok(GraphSpec {
            field,
            q,
            a: *a,
            exponent,
            coeffs: [cf, cg, ch],
            powers,
        })
    }

    /// Uses [`select_parameter`].
    pub fn default_for(field: &'f FieldCtx) -> Result<Self> {
        Self::new(field, &select_parameter(field)?)
    }

    pub fn field(&self) -> &'f FieldCtx {
        self.field
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn a(&self) -> FieldElem {
        self.a
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn coefficient(&self, layer: Layer) -> FieldElem {
        self.coeffs[layer.index()]
    }

    /// `c z^e` for the given layer.
    pub fn shift_value(&self, layer: Layer, z: &FieldElem) -> FieldElem {
        let zp = &self.powers[self.field.encode(z) as usize];
        self.field.mul(&self.coeffs[layer.index()], zp)
    }

    /// Vertices per part, `q^6`.
    pub fn part_size(&self) -> u64 {
        self.field.order() * self.field.order()
    }

    /// Position of a vertex within its part, `encode(x) * q^3 + encode(y)`.
    pub fn vertex_index(&self, v: &Vertex) -> u64 {
        self.field.encode(&v.x) * self.field.order() + self.field.encode(&v.y)
    }

    pub fn vertex_at(&self, part: Part, index: u64) -> Result<Vertex> {
        let order = self.field.order();
        if index >= order * order {
            return Err(Error::OutOfRange(index));
        }
        Ok(Vertex {
            part,
            x: self.field.decode(index / order)?,
            y: self.field.decode(index % order)?,
        })
    }

    /// The `q^3 - 1` neighbours of `v` in `target`.
    pub fn neighbors(&self, v: &Vertex, target: Part) -> Result<impl Iterator<Item = Vertex> + '_> {
        let (layer, forward) = Layer::between(v.part, target)?;
        let f = self.field;
        let v = *v;
        Ok(f.units().map(move |z| {
            let dy = self.shift_value(layer, &z);
            if forward {
                Vertex {
                    part: target,
                    x: f.add(&v.x, &z),
                    y: f.add(&v.y, &dy),
                }
            } else {
                Vertex {
                    part: target,
                    x: f.sub(&v.x, &z),
                    y: f.sub(&v.y, &dy),
                }
            }
        }))
    }

    pub fn adjacent(&self, u: &Vertex, v: &Vertex) -> Result<bool> {
        let (layer, forward) = Layer::between(u.part, v.part)?;
        let (src, dst) = if forward { (u, v) } else { (v, u) };
        let f = self.field;
        let z = f.sub(&dst.x, &src.x);
        if z.is_zero() {
            return Ok(false);
        }
        Ok(f.sub(&dst.y, &src.y) == self.shift_value(layer, &z))
    }

    /// Every edge once, oriented along its layer: layers in order AB, BC,
    /// CA; then source index; then `z` by encoding. Yields
    /// `(layer, source index, target index)`.
    pub fn edges(&self) -> impl Iterator<Item = (Layer, u64, u64)> + '_ {
        let order = self.field.order();
        Layer::ALL.into_iter().flat_map(move |layer| {
            (0..order * order).flat_map(move |src| {
                let x = self.field.decode(src / order).expect("in range");
                let y = self.field.decode(src % order).expect("in range");
                self.field.units().map(move |z| {
                    let tx = self.field.add(&x, &z);
                    let ty = self.field.add(&y, &self.shift_value(layer, &z));
                    let dst = self.field.encode(&tx) * order + self.field.encode(&ty);
                    (layer, src, dst)
                })
            })
        })
    }

    /// Edges per layer, `q^6 (q^3 - 1)`.
    pub fn layer_edge_count(&self) -> u64 {
        self.part_size() * (self.field.order() - 1)
    }

    /// Stores the whole graph. Limited to `q^3 <= 125`.
    pub fn materialize(&self) -> Result<ExplicitTripartite> {
        if self.field.order() > 125 {
            return Err(Error::TooLarge);
        }
        let k = self.part_size() as usize;
        let mut g = ExplicitTripartite::empty(k);
        for (layer, src, dst) in self.edges() {
            g.layers[layer.index()][src as usize].push(dst as u32);
        }
        g.sort();
        Ok(g)
    }
}

/// A 3-partite graph with `k` vertices per part, stored as forward
/// adjacency lists for each layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitTripartite {
    pub part_size: usize,
    /// `layers[l][u]` lists the forward neighbours of `u`, sorted.
    pub layers: [Vec<Vec<u32>>; 3],
}

impl ExplicitTripartite {
    pub fn empty(part_size: usize) -> Self {
        let empty = || alloc::vec![Vec::new(); part_size];
        ExplicitTripartite {
            part_size,
            layers: [empty(), empty(), empty()],
        }
    }

    pub fn add_edge(&mut self, layer: Layer, src: u32, dst: u32) {
        let list = &mut self.layers[layer.index()][src as usize];
        if let Err(pos) = list.binary_search(&dst) {
            list.insert(pos, dst);
        }
    }

    pub fn has_edge(&self, layer: Layer, src: u32, dst: u32) -> bool {
        self.layers[layer.index()][src as usize]
            .binary_search(&dst)
            .is_ok()
    }

    pub fn edge_count(&self, layer: Layer) -> usize {
        self.layers[layer.index()].iter().map(Vec::len).sum()
    }

    fn sort(&mut self) {
        for layer in self.layers.iter_mut() {
            for list in layer.iter_mut() {
                list.sort_unstable();
                list.dedup();
            }
        }
    }
}

/// Addition and multiplication tables for `F_q`, by element index.
struct SmallField {
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl SmallField {
    fn new(q: u64) -> Result<Self> {
        let (p, m) = crate::gf::prime_power(q).ok_or(Error::BadOrder(q))?;
        let qs = q as usize;
        let mut add = alloc::vec![0u32; qs * qs];
        let mut mul = alloc::vec![0u32; qs * qs];
        if m == 1 {
            for i in 0..qs {
                for j in 0..qs {
                    add[i * qs + j] = ((i + j) % qs) as u32;
                    mul[i * qs + j] = ((i * j) % qs) as u32;
                }
            }
        } else {
            if p == 2 {
                return Err(Error::BadOrder(q));
            }
            let f = FieldCtx::new(p, m as usize, None)?;
            for x in f.elements() {
                for y in f.elements() {
                    let idx = (f.encode(&x) * q + f.encode(&y)) as usize;
                    add[idx] = f.encode(&f.add(&x, &y)) as u32;
                    mul[idx] = f.encode(&f.mul(&x, &y)) as u32;
                }
            }
        }
        Ok(SmallField { q: qs, add, mul })
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }

    /// Nonzero triples whose first nonzero coordinate is 1.
    fn projective_points(&self) -> Vec<[u32; 3]> {
        let q = self.q as u32;
        let mut pts = Vec::with_capacity(self.q * self.q + self.q + 1);
        for a in 0..q {
            for b in 0..q {
                pts.push([1, a, b]);
            }
        }
        for b in 0..q {
            pts.push([0, 1, b]);
        }
        pts.push([0, 0, 1]);
        pts
    }
}

/// The incidence graph of `PG(2, q)` between A (points) and B (lines), plus
/// C-vertex 0 joined to everything in A and B; the other C-vertices are
/// isolated. Supports primes and odd prime powers.
pub fn baseline_projective(q: u64) -> Result<ExplicitTripartite> {
    if !(2..=1 << 10).contains(&q) {
        return Err(Error::BadOrder(q));
    }
    let field = SmallField::new(q)?;
    let points = field.projective_points();
    let k = points.len();
    let mut g = ExplicitTripartite::empty(k);
    for (i, pt) in points.iter().enumerate() {
        for (j, line) in points.iter().enumerate() {
            let dot = (0..3).fold(0, |acc, t| field.add(acc, field.mul(pt[t], line[t])));
            if dot == 0 {
                g.layers[Layer::AB.index()][i].push(j as u32);
            }
        }
    }
    for j in 0..k {
        g.layers[Layer::BC.index()][j].push(0);
    }
    g.layers[Layer::CA.index()][0] = (0..k as u32).collect();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f27() -> FieldCtx {
        FieldCtx::cubic_extension(3).unwrap()
    }

    #[test]
    fn subfield_parameters_rejected() {
        let f = f27();
        for k in 0..3 {
            assert_eq!(
                constraint_check(&f, &f.from_int(k)),
                Err(ConstraintViolation::SubfieldElement)
            );
        }
    }

    #[test]
    fn selected_parameter_is_smallest_valid() {
        let f = f27();
        let a = select_parameter(&f).unwrap();
        assert!(f.encode(&a) >= 3);
        assert!(!f.in_subfield(&a).unwrap());
        assert!(constraint_check(&f, &a).is_ok());
        for b in f.units().take_while(|b| f.encode(b) < f.encode(&a)) {
            assert!(constraint_check(&f, &b).is_err());
        }
    }

    #[test]
    fn spec_coefficients_nonzero() {
        let f = f27();
        let spec = GraphSpec::default_for(&f).unwrap();
        for layer in Layer::ALL {
            assert!(!spec.coefficient(layer).is_zero());
        }
        assert_eq!(spec.coefficient(Layer::CA), f.one());
        assert_eq!(spec.coefficient(Layer::AB), f.sub(&spec.a(), &f.one()));
    }

    #[test]
    fn invalid_parameter_refused() {
        let f = f27();
        assert_eq!(
            GraphSpec::new(&f, &f.one()).unwrap_err(),
            Error::InvalidParameter(ConstraintViolation::SubfieldElement)
        );
        let bad_g = f
            .units()
            .find(|a| constraint_check(&f, a) == Err(ConstraintViolation::ConstraintEqZero));
        if let Some(a) = bad_g {
            assert!(GraphSpec::new(&f, &a).is_err());
        }
    }

    #[test]
    fn neighbors_of_origin() {
        let f = f27();
        let spec = GraphSpec::default_for(&f).unwrap();
        let origin = Vertex {
            part: Part::A,
            x: f.zero(),
            y: f.zero(),
        };
        let cf = spec.coefficient(Layer::AB);
        let nb: Vec<_> = spec.neighbors(&origin, Part::B).unwrap().collect();
        assert_eq!(nb.len(), 26);
        for (z, v) in f.units().zip(&nb) {
            assert_eq!(v.x, z);
            assert_eq!(v.y, f.mul(&cf, &f.pow(&z, 4)));
            assert!(spec.adjacent(&origin, v).unwrap());
            assert!(spec.adjacent(v, &origin).unwrap());
        }
        assert_eq!(spec.neighbors(&origin, Part::C).unwrap().count(), 26);
        assert_eq!(
            spec.neighbors(&origin, Part::A).err(),
            Some(Error::SamePart)
        );
    }

    #[test]
    fn adjacency_basics() {
        let f = f27();
        let spec = GraphSpec::default_for(&f).unwrap();
        let origin = Vertex {
            part: Part::A,
            x: f.zero(),
            y: f.zero(),
        };
        for y in f.elements() {
            let v = Vertex {
                part: Part::B,
                x: f.zero(),
                y,
            };
            assert!(!spec.adjacent(&origin, &v).unwrap());
        }
        let v = Vertex {
            part: Part::B,
            x: f.one(),
            y: spec.coefficient(Layer::AB),
        };
        assert!(spec.adjacent(&origin, &v).unwrap());
        assert_eq!(spec.adjacent(&origin, &origin), Err(Error::SamePart));
    }

    #[test]
    fn materialized_degrees() {
        let f = f27();
        let spec = GraphSpec::default_for(&f).unwrap();
        let g = spec.materialize().unwrap();
        assert_eq!(g.part_size, 729);
        for layer in Layer::ALL {
            assert_eq!(g.edge_count(layer) as u64, spec.layer_edge_count());
            assert!(g.layers[layer.index()].iter().all(|l| l.len() == 26));
            let mut indeg = alloc::vec![0u32; 729];
            for list in &g.layers[layer.index()] {
                for &d in list {
                    indeg[d as usize] += 1;
                }
            }
            assert!(indeg.iter().all(|&d| d == 26));
        }
    }

    #[test]
    fn baseline_sizes() {
        for (q, k) in [(2u64, 7usize), (3, 13), (5, 31), (9, 91)] {
            let g = baseline_projective(q).unwrap();
            assert_eq!(g.part_size, k);
            assert_eq!(g.edge_count(Layer::AB), (q as usize + 1) * k);
            assert!(g.layers[0].iter().all(|l| l.len() == q as usize + 1));
        }
        assert_eq!(baseline_projective(4).unwrap_err(), Error::BadOrder(4));
        assert_eq!(baseline_projective(6).unwrap_err(), Error::BadOrder(6));
    }
}
