//! Seeded, deterministic instance generators: general supports,
//! special positions (collinear, conic, cubic), and the double
//! decomposition fixture supported on a line.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{compose_tensor, power_form, Form, Instance, ProjPoint, Scalar};
use crate::error::{Error, Result};
use crate::hilbert::{evaluation_matrix, PointSet};
use crate::linalg::{kernel_basis, rank, Matrix};
use crate::pipeline::non_redundant;
use crate::position::family_obstruction;

/// Requested support shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// No 3 collinear, no 6 on a conic, non-redundant.
    General,
    /// The given number of points on one line, the rest general.
    Collinear(usize),
    /// The given number of points on the conic x^2 + y^2 = z^2, the rest
    /// general.
    Conic(usize),
    /// All points on the cuspidal cubic x^3 = y^2 z.
    Cubic,
}

const MAX_ATTEMPTS: usize = 10_000;

fn budget_err(what: &str) -> Error {
    Error::InvalidRequest(format!("resampling budget exhausted while {what}"))
}

fn random_point(rng: &mut ChaCha8Rng) -> ProjPoint {
    loop {
        let coords: [i64; 3] = [
            rng.random_range(-20..=20),
            rng.random_range(-20..=20),
            rng.random_range(-20..=20),
        ];
        if coords.iter().any(|&c| c != 0) {
            return ProjPoint::new(coords).unwrap();
        }
    }
}

fn nonzero_coeff(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let a: i64 = rng.random_range(-9..=9);
        if a != 0 {
            return crate::algebra::scalar(a);
        }
    }
}

fn collinear_with_pair(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    let (x, y, z) = (a.coords(), b.coords(), c.coords());
    let det = &x[0] * (&y[1] * &z[2] - &y[2] * &z[1]) - &x[1] * (&y[0] * &z[2] - &y[2] * &z[0])
        + &x[2] * (&y[0] * &z[1] - &y[1] * &z[0]);
    det.is_zero()
}

/// Incrementally grown general support. Each accepted point extends the
/// cached list of conics through the existing 5-subsets, so candidate
/// screening stays cheap.
struct GeneralSampler {
    points: Vec<ProjPoint>,
    conics: Vec<Form>,
}

impl GeneralSampler {
    fn new() -> Self {
        Self {
            points: Vec::new(),
            conics: Vec::new(),
        }
    }

    fn admissible(&self, c: &ProjPoint) -> bool {
        if self.points.contains(c) {
            return false;
        }
        // no 3 collinear
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                if collinear_with_pair(&self.points[i], &self.points[j], c) {
                    return false;
                }
            }
        }
        // no 6 on a conic: with no 3 collinear every 5-subset determines
        // a unique conic, all of which are cached
        self.conics.iter().all(|conic| !conic.eval(c).is_zero())
    }

    fn push(&mut self, c: ProjPoint) {
        self.points.push(c);
        let k = self.points.len();
        if k >= 5 {
            let mut indices: Vec<usize> = Vec::new();
            // new 5-subsets are exactly those containing the new point
            for subset in combinations(k - 1, 4) {
                indices.clear();
                indices.extend_from_slice(&subset);
                indices.push(k - 1);
                let sub = PointSet::new(indices.iter().map(|&i| self.points[i].clone()).collect())
                    .expect("distinct by construction");
                let kernel = kernel_basis(&evaluation_matrix(&sub, 2));
                debug_assert_eq!(kernel.len(), 1, "general 5-subsets have a unique conic");
                for v in kernel {
                    self.conics.push(Form::from_int_coeffs(2, v).unwrap());
                }
            }
        }
    }

    fn fill(&mut self, rng: &mut ChaCha8Rng, target: usize, attempts: &mut usize) -> Result<()> {
        while self.points.len() < target {
            *attempts += 1;
            if *attempts > MAX_ATTEMPTS {
                return Err(budget_err("sampling a general support"));
            }
            let c = random_point(rng);
            if self.admissible(&c) {
                self.push(c);
            }
        }
        Ok(())
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

fn sample_distinct_ints(
    rng: &mut ChaCha8Rng,
    count: usize,
    lo: i64,
    hi: i64,
    forbid_zero: bool,
) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        assert!(attempts <= MAX_ATTEMPTS, "parameter range too small");
        let t = rng.random_range(lo..=hi);
        if (forbid_zero && t == 0) || out.contains(&t) {
            continue;
        }
        out.push(t);
    }
    out
}

/// Points of the conic x^2 + y^2 = z^2 under its rational parametrization.
fn conic_point(t: i64) -> ProjPoint {
    ProjPoint::new([1 - t * t, 2 * t, 1 + t * t]).unwrap()
}

/// Points of the cuspidal cubic x^3 = y^2 z.
fn cubic_point(t: i64) -> ProjPoint {
    ProjPoint::new([t * t, t * t * t, 1]).unwrap()
}

/// Deterministically generates an instance of degree 8 + 2n with the
/// requested support shape. Unless `allow_out_of_range` is set, the
/// length must respect r <= 11 + 3n.
pub fn gen_instance(
    n: usize,
    r: usize,
    position: Position,
    seed: u64,
    allow_out_of_range: bool,
) -> Result<Instance> {
    if r == 0 {
        return Err(Error::InvalidRequest("length must be >= 1".into()));
    }
    if !allow_out_of_range && r > 11 + 3 * n {
        return Err(Error::InvalidRequest(format!(
            "length {r} exceeds the pipeline bound {} for n = {n} (pass the override to force it)",
            11 + 3 * n
        )));
    }
    match position {
        Position::Collinear(s) | Position::Conic(s) if s > r => {
            return Err(Error::InvalidRequest(format!(
                "requested {s} special points but the support has length {r}"
            )));
        }
        _ => {}
    }
    let d = 8 + 2 * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0usize;
    loop {
        attempts += 1;
        if attempts > 50 {
            return Err(budget_err("generating an instance with the requested shape"));
        }
        let points = match position {
            Position::General => {
                let mut sampler = GeneralSampler::new();
                let mut inner = 0usize;
                sampler.fill(&mut rng, r, &mut inner)?;
                sampler.points
            }
            Position::Collinear(s) => {
                let a = random_point(&mut rng);
                let b = loop {
                    let b = random_point(&mut rng);
                    if b != a {
                        break b;
                    }
                };
                // u*a + b for distinct u stays on the line through a and b
                let params = sample_distinct_ints(&mut rng, s, -20, 20, false);
                let mut pts: Vec<ProjPoint> = params
                    .iter()
                    .map(|&u| {
                        let coords = [
                            a.coords()[0].clone() * u + b.coords()[0].clone(),
                            a.coords()[1].clone() * u + b.coords()[1].clone(),
                            a.coords()[2].clone() * u + b.coords()[2].clone(),
                        ];
                        ProjPoint::new(coords).unwrap()
                    })
                    .collect();
                if !fill_rest_general(&mut rng, &mut pts, r) {
                    continue;
                }
                pts
            }
            Position::Conic(s) => {
                let params = sample_distinct_ints(&mut rng, s, -20, 20, false);
                let mut pts: Vec<ProjPoint> = params.iter().map(|&t| conic_point(t)).collect();
                if !fill_rest_general(&mut rng, &mut pts, r) {
                    continue;
                }
                pts
            }
            Position::Cubic => {
                let params = sample_distinct_ints(&mut rng, r, -20, 20, true);
                params.iter().map(|&t| cubic_point(t)).collect()
            }
        };
        if points.len() != r {
            continue;
        }
        let coefficients: Vec<Scalar> = (0..r).map(|_| nonzero_coeff(&mut rng)).collect();
        let inst = Instance::new(d, points, coefficients)?;

        // Postconditions, checked rather than assumed.
        let z = PointSet::new(inst.points().to_vec())?;
        let shape_ok = match position {
            Position::General => family_obstruction(&z, n).is_none(),
            Position::Collinear(s) => s < 2 || crate::position::max_collinear(&z).0 >= s,
            Position::Conic(s) => crate::position::max_on_conic(&z).0 >= s,
            Position::Cubic => crate::position::contained_in_cubic(&z).0,
        };
        if !shape_ok {
            continue;
        }
        // Keep the instance non-redundant whenever the shape permits it;
        // more than d + 1 collinear points have dependent Veronese rows
        // no matter what.
        let can_be_non_redundant = match position {
            Position::Collinear(s) => s <= d + 1,
            _ => true,
        };
        if !can_be_non_redundant || non_redundant(&inst).0 {
            return Ok(inst);
        }
    }
}

/// Extends `pts` with random distinct points. Returns false when the
/// sampling budget runs out (caller retries with fresh randomness).
fn fill_rest_general(rng: &mut ChaCha8Rng, pts: &mut Vec<ProjPoint>, target: usize) -> bool {
    let mut attempts = 0usize;
    while pts.len() < target {
        attempts += 1;
        if attempts > MAX_ATTEMPTS {
            return false;
        }
        let c = random_point(rng);
        if !pts.contains(&c) {
            pts.push(c);
        }
    }
    true
}

/// A form supported on the line z = 0 together with two disjoint length-r
/// decompositions of it. Requires 2r > d + 1 >= r; the two supports and
/// the unique linear relation among their Veronese rows are exact.
pub fn gen_double_decomposition_fixture(
    d: usize,
    r: usize,
    seed: u64,
) -> Result<(Instance, Instance, Form)> {
    if r == 0 || 2 * r <= d + 1 || d + 1 < r {
        return Err(Error::InvalidRequest(format!(
            "need 2r > d + 1 >= r, got d = {d}, r = {r}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outer = 0usize;
    loop {
        outer += 1;
        if outer > 100 {
            return Err(budget_err("building a double decomposition fixture"));
        }
        let params = sample_distinct_ints(&mut rng, 2 * r, -40, 40, false);
        let points: Vec<ProjPoint> = params
            .iter()
            .map(|&t| ProjPoint::new([1, t, 0]).unwrap())
            .collect();
        // A relation sum c_i v_d(P_i) = 0 exists because 2r >= d + 2;
        // its coefficients are the kernel of the matrix with the
        // Veronese rows as columns.
        let rows: Vec<Vec<Scalar>> = points
            .iter()
            .map(|p| power_form(p, d).coeffs().to_vec())
            .collect();
        let m = Matrix::from_rows(rows.clone()).transpose();
        let kernel = kernel_basis(&m);
        debug_assert_eq!(kernel.len(), 2 * r - rank(&Matrix::from_rows(rows)).0);
        let Some(relation) = pick_nonvanishing_combination(&kernel, &mut rng) else {
            continue;
        };
        let coeffs: Vec<Scalar> = relation
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let a = Instance::new(d, points[..r].to_vec(), coeffs[..r].to_vec())?;
        let b = Instance::new(
            d,
            points[r..].to_vec(),
            coeffs[r..].iter().map(|c| -c).collect(),
        )?;
        let t = compose_tensor(&a);
        debug_assert_eq!(t, compose_tensor(&b));
        return Ok((a, b, t));
    }
}

/// A kernel vector with all entries nonzero: the basis vector itself when
/// the kernel is a line, otherwise a random small combination.
fn pick_nonvanishing_combination(
    kernel: &[Vec<BigInt>],
    rng: &mut ChaCha8Rng,
) -> Option<Vec<BigInt>> {
    if kernel.is_empty() {
        return None;
    }
    if kernel.len() == 1 {
        return kernel[0]
            .iter()
            .all(|c| !c.is_zero())
            .then(|| kernel[0].clone());
    }
    for _ in 0..200 {
        let mut v = vec![BigInt::zero(); kernel[0].len()];
        for basis_vec in kernel {
            let w: i64 = rng.random_range(-9..=9);
            if w == 0 {
                continue;
            }
            for (dst, c) in v.iter_mut().zip(basis_vec) {
                *dst += c * w;
            }
        }
        if v.iter().all(|c| !c.is_zero()) {
            return Some(v);
        }
    }
    None
}
