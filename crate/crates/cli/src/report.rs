//! Machine-readable output: the polynomial document and the benchmark report.

use std::fmt::Write as _;
use std::time::Instant;

use implicit_core::rat::{parse_exact, to_exact_string};
use implicit_core::{
    degree_bounds, method_dual_vandermonde, method_kronecker, method_unstructured, BiPoly,
    ImplicitResult, Method, MethodConfig, OpCounter, RatParam, Result,
};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const BASIS: &str = "x^i*y^j (i-major)";

/// JSON form of an implicit polynomial. Field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub m: usize,
    pub n: usize,
    pub basis: String,
    pub coeffs: Vec<Vec<String>>,
    pub verified: bool,
    pub degree_tight: bool,
    pub method: String,
}

impl PolyDoc {
    pub fn from_result(r: &ImplicitResult) -> Self {
        PolyDoc {
            m: r.poly.m(),
            n: r.poly.n(),
            basis: BASIS.to_string(),
            coeffs: exact_grid(&r.poly),
            verified: r.verified,
            degree_tight: r.degree_tight,
            method: r.method.as_str().to_string(),
        }
    }
}

/// Input side of [`PolyDoc`]: only the coefficient grid is required.
#[derive(Debug, Deserialize)]
struct PolyInput {
    m: Option<usize>,
    n: Option<usize>,
    coeffs: Vec<Vec<String>>,
}

fn exact_grid(f: &BiPoly) -> Vec<Vec<String>> {
    f.grid()
        .iter()
        .map(|row| row.iter().map(to_exact_string).collect())
        .collect()
}

/// Read a polynomial from a JSON document with at least a `coeffs` grid.
pub fn poly_from_json(text: &str) -> std::result::Result<BiPoly, String> {
    let doc: PolyInput = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let grid = doc
        .coeffs
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_exact(s).ok_or_else(|| format!("invalid coefficient `{s}`")))
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let f = BiPoly::from_grid(grid).map_err(|e| e.to_string())?;
    if doc.m.is_some_and(|m| m != f.m()) || doc.n.is_some_and(|n| n != f.n()) {
        return Err("`m`/`n` do not match the shape of `coeffs`".into());
    }
    Ok(f)
}

/// Hex SHA-256 of the exact coefficient grid of a canonical polynomial.
pub fn poly_hash(f: &BiPoly) -> String {
    let mut text = format!("{}x{}:", f.m(), f.n());
    for (k, c) in f.coeffs().iter().enumerate() {
        if k > 0 {
            text.push(',');
        }
        text.push_str(&to_exact_string(c));
    }
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpStats {
    pub adds: u64,
    pub muls: u64,
    pub divs: u64,
    pub max_bits: u64,
    pub dets: u64,
    pub vandermonde_solves: u64,
}

impl OpStats {
    pub fn mul_div(&self) -> u64 {
        self.muls + self.divs
    }

    pub fn total(&self) -> u64 {
        self.adds + self.muls + self.divs
    }
}

impl From<&OpCounter> for OpStats {
    fn from(c: &OpCounter) -> Self {
        OpStats {
            adds: c.adds,
            muls: c.muls,
            divs: c.divs,
            max_bits: c.max_bits,
            dets: c.dets,
            vandermonde_solves: c.vandermonde_solves,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRecord {
    pub method: String,
    /// Median over the repetitions.
    pub wall_ms: f64,
    pub samples_ms: Vec<f64>,
    pub data: OpStats,
    pub solve: OpStats,
    /// Largest bit length over the interpolation data and matrix entries.
    pub max_bits: u64,
    pub hash: String,
    pub verified: bool,
    pub degree_tight: bool,
    pub extra_nodes: usize,
    pub poly: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub m: usize,
    pub n: usize,
    pub dim: usize,
    pub repeat: usize,
    pub records: Vec<BenchRecord>,
}

impl BenchReport {
    pub fn record(&self, method: Method) -> Option<&BenchRecord> {
        self.records.iter().find(|r| r.method == method.as_str())
    }

    pub fn agreed(&self) -> bool {
        self.records.windows(2).all(|w| w[0].hash == w[1].hash)
    }

    pub fn all_verified(&self) -> bool {
        self.records.iter().all(|r| r.verified)
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "m = {}, n = {}, N = {}, repeat = {}",
            self.m, self.n, self.dim, self.repeat
        );
        let _ = writeln!(
            s,
            "{:<13} {:>10} {:>10} {:>10} {:>8} {:>8}  hash",
            "method", "wall_ms", "data_ops", "solve_ops", "max_bits", "verified"
        );
        for r in &self.records {
            let _ = writeln!(
                s,
                "{:<13} {:>10.3} {:>10} {:>10} {:>8} {:>8}  {}",
                r.method,
                r.wall_ms,
                r.data.total(),
                r.solve.total(),
                r.max_bits,
                r.verified,
                &r.hash[..16]
            );
        }
        s
    }
}

fn run_method(param: &RatParam, method: Method, primes: (u64, u64)) -> Result<ImplicitResult> {
    let mut cfg = MethodConfig::new(method);
    cfg.primes = primes;
    match method {
        Method::Unstructured => method_unstructured(param, &cfg),
        Method::DualVandermonde => method_dual_vandermonde(param, &cfg),
        Method::Kronecker => method_kronecker(param),
    }
}

fn median(samples: &[f64]) -> f64 {
    let mut v = samples.to_vec();
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

/// Run each method `repeat` times and collect timings, counters and hashes.
pub fn run_bench(
    param: &RatParam,
    methods: &[Method],
    repeat: usize,
    primes: (u64, u64),
) -> Result<BenchReport> {
    MethodConfig::new(Method::DualVandermonde).with_primes(primes.0, primes.1)?;
    let repeat = repeat.max(1);
    let bounds = degree_bounds(param);
    let mut records = Vec::with_capacity(methods.len());
    for &method in methods {
        let mut samples = Vec::with_capacity(repeat);
        let mut last = None;
        for _ in 0..repeat {
            let start = Instant::now();
            let r = run_method(param, method, primes)?;
            samples.push(start.elapsed().as_secs_f64() * 1e3);
            last = Some(r);
        }
        let r = last.expect("at least one repetition");
        records.push(BenchRecord {
            method: method.as_str().to_string(),
            wall_ms: median(&samples),
            samples_ms: samples,
            data: OpStats::from(&r.data_counter),
            solve: OpStats::from(&r.solve_counter),
            max_bits: r.data_bits,
            hash: poly_hash(&r.poly),
            verified: r.verified,
            degree_tight: r.degree_tight,
            extra_nodes: r.extra_nodes,
            poly: r.poly.render(),
        });
    }
    Ok(BenchReport {
        m: bounds.m,
        n: bounds.n,
        dim: bounds.dim,
        repeat,
        records,
    })
}
