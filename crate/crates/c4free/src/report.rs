//! Serialized forms of the verification results.
//!
//! Field elements appear as their integer encodings. Every top-level JSON
//! document carries `"schema": 1`, and field order is fixed by declaration
//! order, so identical runs produce identical bytes.

use c4free_core::fa::{FiberCheck, SplittingReport};
use c4free_core::planar::PlanarWitness;
use c4free_core::verify::{BoundsRow, C4Method, C4Status, PairCount, VerifyReport};
use c4free_core::{FieldCtx, GraphSpec, Layer};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct FieldJson {
    pub p: u64,
    pub n: usize,
    pub modulus: Vec<u64>,
    pub q_sub: Option<u64>,
    pub order: u64,
}

impl From<&FieldCtx> for FieldJson {
    fn from(f: &FieldCtx) -> Self {
        FieldJson {
            p: f.characteristic(),
            n: f.degree(),
            modulus: f.modulus().to_vec(),
            q_sub: f.subfield_order(),
            order: f.order(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FieldInfoDoc {
    pub schema: u32,
    pub command: &'static str,
    pub field: FieldJson,
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub shift: u64,
    pub x: u64,
    pub x_other: u64,
}

impl WitnessJson {
    pub fn new(f: &FieldCtx, w: &PlanarWitness) -> Self {
        WitnessJson {
            shift: f.encode(&w.shift),
            x: f.encode(&w.x),
            x_other: f.encode(&w.x_other),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PlanarDoc {
    pub schema: u32,
    pub command: &'static str,
    pub family: &'static str,
    pub field: FieldJson,
    pub alpha: u32,
    pub e: u32,
    pub exponent: u64,
    pub is_planar: bool,
    pub predicted: bool,
    pub witness: Option<WitnessJson>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct FiberJson {
    pub trace_equivalence: bool,
    /// `[t, |L^{-1}(t)|]` for each `t` in `F_q`.
    pub fiber_sizes: Vec<(u64, u64)>,
    pub pass: bool,
}

impl FiberJson {
    pub fn new(f: &FieldCtx, c: &FiberCheck) -> Self {
        FiberJson {
            trace_equivalence: c.trace_equivalence,
            fiber_sizes: c
                .fiber_sizes
                .iter()
                .map(|(t, s)| (f.encode(t), *s))
                .collect(),
            pass: c.pass,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FaRecord {
    pub schema: u32,
    pub q: u64,
    pub a: u64,
    pub a_in_subfield: bool,
    /// `[root, multiplicity]` pairs in increasing encoding.
    pub roots: Vec<(u64, u32)>,
    pub splits_in_units: bool,
    pub l_fibers: Option<FiberJson>,
    pub pass: bool,
}

impl FaRecord {
    pub fn new(f: &FieldCtx, r: &SplittingReport, fibers: Option<&FiberCheck>) -> Self {
        let fiber_pass = fibers.is_none_or(|c| c.pass);
        FaRecord {
            schema: SCHEMA,
            q: f.subfield_order().unwrap_or_default(),
            a: f.encode(&r.a),
            a_in_subfield: r.a_in_subfield,
            roots: r.roots.iter().map(|(x, m)| (f.encode(x), *m)).collect(),
            splits_in_units: r.splits_in_units,
            l_fibers: fibers.map(|c| FiberJson::new(f, c)),
            pass: r.pass && fiber_pass,
        }
    }

    pub const CSV_HEADER: &'static str = "q,a,a_in_subfield,distinct_roots,splits_in_units,pass";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.q,
            self.a,
            self.a_in_subfield,
            self.roots.len(),
            self.splits_in_units,
            self.pass
        )
    }
}

#[derive(Debug, Serialize)]
pub struct Coefficients {
    pub cf: u64,
    pub cg: u64,
    pub ch: u64,
}

#[derive(Debug, Serialize)]
pub struct ConstructDoc {
    pub schema: u32,
    pub command: &'static str,
    pub q: u64,
    pub field: FieldJson,
    pub a: u64,
    pub exponent: u64,
    pub coefficients: Coefficients,
    pub part_size: u64,
    pub layer_edges: u64,
}

impl ConstructDoc {
    pub fn new(spec: &GraphSpec<'_>) -> Self {
        let f = spec.field();
        let c = |l| f.encode(&spec.coefficient(l));
        ConstructDoc {
            schema: SCHEMA,
            command: "construct",
            q: spec.q(),
            field: f.into(),
            a: f.encode(&spec.a()),
            exponent: spec.exponent(),
            coefficients: Coefficients {
                cf: c(Layer::AB),
                cg: c(Layer::BC),
                ch: c(Layer::CA),
            },
            part_size: spec.part_size(),
            layer_edges: spec.layer_edge_count(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct C4Json {
    pub layer: &'static str,
    pub method: &'static str,
    pub status: &'static str,
    /// Two sources and two shared targets, as vertex indices.
    pub witness: Option<[u32; 4]>,
}

impl C4Json {
    pub fn new(layer: Layer, method: C4Method, status: &C4Status) -> Self {
        let method = match method {
            C4Method::Direct => "direct",
            C4Method::Planarity => "planarity",
        };
        let (status, witness) = match status {
            C4Status::Clean => ("clean", None),
            C4Status::Violation(w) => (
                "violation",
                Some([w.sources.0, w.sources.1, w.targets.0, w.targets.1]),
            ),
            C4Status::NotEstablished(_) => ("not-established", None),
        };
        C4Json {
            layer: layer.name(),
            method,
            status,
            witness,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub schema: u32,
    pub command: &'static str,
    pub q: u64,
    pub a: u64,
    pub c4_status: Vec<C4Json>,
    pub triangle_count_symbolic: u64,
    pub triangle_count_oracle: Option<u64>,
    pub pair_solution_count: u64,
    pub lower_bound_paper: u64,
    pub pass: bool,
}

impl From<&VerifyReport> for VerifyDoc {
    fn from(r: &VerifyReport) -> Self {
        VerifyDoc {
            schema: SCHEMA,
            command: "verify",
            q: r.q,
            a: r.a,
            c4_status: r
                .c4
                .iter()
                .map(|(l, m, s)| C4Json::new(*l, *m, s))
                .collect(),
            triangle_count_symbolic: r.triangle_count_symbolic,
            triangle_count_oracle: r.triangle_count_oracle,
            pair_solution_count: r.pair_solution_count,
            lower_bound_paper: r.lower_bound,
            pass: r.pass,
        }
    }
}

impl VerifyDoc {
    pub const CSV_HEADER: &'static str = "q,a,pair_solutions,triangles,bound,pass";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.q,
            self.a,
            self.pair_solution_count,
            self.triangle_count_symbolic,
            self.lower_bound_paper,
            self.pass
        )
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub q: u64,
    pub k: u64,
    pub baseline_k: u64,
    pub baseline_triangles: u64,
    pub lower_bound: u64,
    pub k_pow_3_2: u128,
    pub k_pow_5_3: u128,
    pub k_pow_7_4_floor: u128,
}

impl From<&BoundsRow> for BoundsJson {
    fn from(r: &BoundsRow) -> Self {
        BoundsJson {
            q: r.q,
            k: r.k,
            baseline_k: r.baseline_k,
            baseline_triangles: r.baseline_triangles,
            lower_bound: r.lower_bound,
            k_pow_3_2: r.k_pow_3_2,
            k_pow_5_3: r.k_pow_5_3,
            k_pow_7_4_floor: r.k_pow_7_4_floor,
        }
    }
}

impl BoundsJson {
    pub const CSV_HEADER: &'static str =
        "q,k,baseline_k,baseline_triangles,lower_bound,k_pow_3_2,k_pow_5_3,k_pow_7_4_floor";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.q,
            self.k,
            self.baseline_k,
            self.baseline_triangles,
            self.lower_bound,
            self.k_pow_3_2,
            self.k_pow_5_3,
            self.k_pow_7_4_floor
        )
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsDoc {
    pub schema: u32,
    pub command: &'static str,
    pub rows: Vec<BoundsJson>,
}

/// Same shape for the plain brute-force pair count and the alternative
/// monomial experiment.
#[derive(Debug, Serialize)]
pub struct PairCountDoc {
    pub schema: u32,
    pub command: &'static str,
    pub q: u64,
    pub a: u64,
    pub exponent: u64,
    pub pair_solutions: u64,
    pub triangles: u64,
}

impl PairCountDoc {
    pub fn new(command: &'static str, c: &PairCount) -> Self {
        PairCountDoc {
            schema: SCHEMA,
            command,
            q: c.q,
            a: c.a,
            exponent: c.exponent,
            pair_solutions: c.pair_solutions,
            triangles: c.triangles,
        }
    }

    pub const CSV_HEADER: &'static str = "q,a,exponent,pair_solutions,triangles";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.q, self.a, self.exponent, self.pair_solutions, self.triangles
        )
    }
}
