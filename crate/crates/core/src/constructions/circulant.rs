use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use super::ConstructionError;
use crate::graph::Graph;

/// Circulant graph `Ci_N(S)`: vertex `i` is adjacent to `i +- s (mod N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    order: usize,
    offsets: Vec<usize>,
}

impl CirculantSpec {
    /// Offsets must be distinct and lie in `1..=N/2`; they are stored sorted.
    pub fn new(order: usize, offsets: &[usize]) -> Result<Self, ConstructionError> {
        if order == 0 {
            return Err(ConstructionError::OrderTooSmall {
                family: "circulant",
                n: 0,
                min: 1,
            });
        }
        let mut sorted = offsets.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(ConstructionError::DuplicateOffset(w[0]));
            }
        }
        let max = order / 2;
        if let Some(&s) = sorted.iter().find(|&&s| s == 0 || s > max) {
            return Err(ConstructionError::OffsetOutOfRange { offset: s, max });
        }
        Ok(CirculantSpec {
            order,
            offsets: sorted,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// `A_n = Ci_{2n}(1, 2)`.
    pub fn antiprism(n: usize) -> Result<Self, ConstructionError> {
        check_min("antiprism", n, 3)?;
        CirculantSpec::new(2 * n, &[1, 2])
    }
}

fn check_min(family: &'static str, n: usize, min: usize) -> Result<(), ConstructionError> {
    if n < min {
        Err(ConstructionError::OrderTooSmall { family, n, min })
    } else {
        Ok(())
    }
}

pub fn circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.order;
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in &spec.offsets {
            let j = (i + s) % n;
            // an offset of N/2 reaches the same vertex in both directions
            if 2 * s == n && j < i {
                continue;
            }
            edges.push((i, j));
        }
    }
    Graph::new(n, &edges).expect("validated offsets give a simple graph")
}

pub fn cycle(n: usize) -> Result<Graph, ConstructionError> {
    check_min("cycle", n, 3)?;
    Ok(circulant(&CirculantSpec::new(n, &[1])?))
}

pub fn antiprism(n: usize) -> Result<Graph, ConstructionError> {
    Ok(circulant(&CirculantSpec::antiprism(n)?))
}

/// `lambda_r = sum_s 2 cos(2 pi r s / N)`, with an offset `s = N/2`
/// contributing `(-1)^r` once.
pub fn circulant_eigenvalues(spec: &CirculantSpec) -> Vec<f64> {
    let n = spec.order;
    (0..n)
        .map(|r| {
            spec.offsets
                .iter()
                .map(|&s| {
                    if 2 * s == n {
                        if r % 2 == 0 {
                            1.0
                        } else {
                            -1.0
                        }
                    } else {
                        2.0 * (2.0 * PI * (r * s) as f64 / n as f64).cos()
                    }
                })
                .sum()
        })
        .collect()
}

/// Closed form `2 (2 cos(pi r / n) - 1)(cos(pi r / n) + 1)` for the
/// eigenvalue `lambda_r` of `A_n`.
pub fn antiprism_eigenvalue(n: usize, r: usize) -> f64 {
    let c = (PI * r as f64 / n as f64).cos();
    2.0 * (2.0 * c - 1.0) * (c + 1.0)
}

/// Nullity of `A_n`: 3 when `3 | n`, otherwise 1.
pub fn antiprism_nullity(n: usize) -> usize {
    if n.is_multiple_of(3) {
        3
    } else {
        1
    }
}

/// Explicit kernel basis of `A_n` in circulant vertex order.
///
/// For `3 | n` the three shifts of the 6-periodic pattern `(0,0,-1,0,0,1)`;
/// otherwise the alternating vector `(-1, 1, ..., -1, 1)`.
pub fn antiprism_kernel_closed_form(n: usize) -> Vec<Vec<BigInt>> {
    let periodic = |pattern: &[i64]| -> Vec<BigInt> {
        (0..2 * n)
            .map(|i| BigInt::from(pattern[i % pattern.len()]))
            .collect()
    };
    if n.is_multiple_of(3) {
        vec![
            periodic(&[0, 0, -1, 0, 0, 1]),
            periodic(&[0, -1, 0, 0, 1, 0]),
            periodic(&[-1, 0, 0, 1, 0, 0]),
        ]
    } else {
        vec![periodic(&[-1, 1])]
    }
}

/// Integer combination `c_a a + c_b b + c_c c + c_d d`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearForm(pub [i64; 4]);

impl LinearForm {
    pub const A: LinearForm = LinearForm([1, 0, 0, 0]);
    pub const B: LinearForm = LinearForm([0, 1, 0, 0]);
    pub const C: LinearForm = LinearForm([0, 0, 1, 0]);
    pub const D: LinearForm = LinearForm([0, 0, 0, 1]);

    pub fn coefficients(&self) -> [i64; 4] {
        self.0
    }

    pub fn eval(&self, values: [i64; 4]) -> i64 {
        self.0.iter().zip(values).map(|(c, v)| c * v).sum()
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(self, o: LinearForm) -> LinearForm {
        LinearForm(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm(self.0.map(|c| -c))
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, o: LinearForm) -> LinearForm {
        self + -o
    }
}

/// Renders like `(-a-b-d)`; single symbols are left bare.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (c, sym) in self.0.iter().zip(['a', 'b', 'c', 'd']) {
            match *c {
                0 => continue,
                1 if s.is_empty() => {}
                1 => s.push('+'),
                -1 => s.push('-'),
                c if c > 0 && !s.is_empty() => s.push_str(&format!("+{c}")),
                c => s.push_str(&c.to_string()),
            }
            s.push(sym);
        }
        match s.as_str() {
            "" => f.write_str("0"),
            "a" | "b" | "c" | "d" => f.write_str(&s),
            _ => write!(f, "({s})"),
        }
    }
}

/// Symbolic solution of `A x = 0` on the antiprism `A_n`.
///
/// Vertices `1..=2n` in the interleaved labelling (outer odd, inner even),
/// which coincides with circulant order. Vertices 1-4 get `a, b, c, d`; the
/// zero-sum rule at vertex `i` determines `x_{i+2}` for `i = 3..=2n-2`. The
/// four remaining zero-sum conditions, at vertices `2n-1, 2n, 1, 2`, are
/// returned as the rows of `Q` (negated, so that `Q (a,b,c,d)^T = 0`).
///
/// The returned vector is indexed from 0, so `x[4]` belongs to vertex 5.
pub fn antiprism_propagate(n: usize) -> Result<(Vec<LinearForm>, [[i64; 4]; 4]), ConstructionError> {
    check_min("antiprism", n, 3)?;
    let m = 2 * n;
    let mut x = vec![LinearForm::default(); m + 1];
    x[1] = LinearForm::A;
    x[2] = LinearForm::B;
    x[3] = LinearForm::C;
    x[4] = LinearForm::D;
    for i in 3..=m - 2 {
        x[i + 2] = -(x[i - 2] + x[i - 1] + x[i + 1]);
    }
    let at = |k: isize| x[((k - 1).rem_euclid(m as isize) + 1) as usize];
    let q = [m - 1, m, 1, 2].map(|i| {
        let i = i as isize;
        (-(at(i - 2) + at(i - 1) + at(i + 1) + at(i + 2))).0
    });
    x.remove(0);
    Ok((x, q))
}
