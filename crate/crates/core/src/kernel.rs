//! Adjacency null spaces, core vertices and the four-way classification.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg;

/// Exact integer basis of `ker A(G)`.
///
/// Basis vectors are primitive with first nonzero entry positive. The basis
/// is the one produced by Bareiss elimination with the fixed pivot rule, so
/// it is reproducible across runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCertificate {
    pub order: usize,
    pub nullity: usize,
    pub basis: Vec<Vec<BigInt>>,
}

/// Primitive, everywhere-nonzero kernel vector of a nullity-one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NutCertificate {
    pub vector: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    NonSingular,
    SingularNonCore,
    CoreNonNut,
    Nut,
}

impl ClassTag {
    pub const ALL: [ClassTag; 4] = [
        ClassTag::NonSingular,
        ClassTag::SingularNonCore,
        ClassTag::CoreNonNut,
        ClassTag::Nut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::NonSingular => "NonSingular",
            ClassTag::SingularNonCore => "SingularNonCore",
            ClassTag::CoreNonNut => "CoreNonNut",
            ClassTag::Nut => "Nut",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown class tag {0:?}")]
pub struct UnknownTag(String);

impl FromStr for ClassTag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

/// Classification outcome with its supporting evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub tag: ClassTag,
    pub kernel: KernelCertificate,
    /// Admissible vector for `CoreNonNut`; the nut vector for `Nut`.
    pub witness: Option<Vec<BigInt>>,
}

impl GraphClass {
    pub fn nullity(&self) -> usize {
        self.kernel.nullity
    }

    pub fn nut_certificate(&self) -> Option<NutCertificate> {
        match self.tag {
            ClassTag::Nut => self.witness.clone().map(|vector| NutCertificate { vector }),
            _ => None,
        }
    }
}

pub fn kernel(g: &Graph) -> KernelCertificate {
    let ns = linalg::null_space(&g.adjacency_matrix());
    for x in &ns.basis {
        assert!(g.annihilates(x), "elimination produced a non-kernel vector");
    }
    KernelCertificate {
        order: g.order(),
        nullity: ns.basis.len(),
        basis: ns.basis,
    }
}

/// Vertices carrying a nonzero entry in some kernel vector, ascending.
pub fn core_vertices(cert: &KernelCertificate) -> Vec<usize> {
    (0..cert.order)
        .filter(|&v| cert.basis.iter().any(|x| !x[v].is_zero()))
        .collect()
}

/// An everywhere-nonzero kernel vector, if every vertex is a core vertex.
///
/// Built as `sum_i t^i * basis[i]` with `t = 1 + max |entry|`; `t` exceeds
/// the Cauchy bound of every coordinate polynomial, so no coordinate vanishes.
pub fn admissible_vector(cert: &KernelCertificate) -> Option<Vec<BigInt>> {
    if cert.nullity == 0 || core_vertices(cert).len() != cert.order {
        return None;
    }
    let max = cert
        .basis
        .iter()
        .flatten()
        .map(|e| e.abs())
        .max()
        .unwrap_or_default();
    let t = max + 1;
    let mut x = vec![BigInt::zero(); cert.order];
    let mut weight = BigInt::from(1);
    for b in &cert.basis {
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi += &weight * bi;
        }
        weight *= &t;
    }
    linalg::normalize(&mut x);
    debug_assert!(x.iter().all(|e| !e.is_zero()));
    Some(x)
}

/// Classifies `g` as nonsingular, singular non-core, core non-nut or nut.
///
/// K1 has nullity one with kernel vector (1) and is reported as `Nut`.
pub fn classify(g: &Graph) -> GraphClass {
    let kernel = kernel(g);
    if kernel.nullity == 0 {
        return GraphClass {
            tag: ClassTag::NonSingular,
            kernel,
            witness: None,
        };
    }
    match admissible_vector(&kernel) {
        None => GraphClass {
            tag: ClassTag::SingularNonCore,
            kernel,
            witness: None,
        },
        Some(x) => {
            let tag = if kernel.nullity == 1 {
                ClassTag::Nut
            } else {
                ClassTag::CoreNonNut
            };
            GraphClass {
                tag,
                kernel,
                witness: Some(x),
            }
        }
    }
}

impl NutCertificate {
    /// Rechecks the certificate against `g` from scratch: `A x = 0`, all entries
    /// nonzero, primitive, first entry positive.
    pub fn verify(&self, g: &Graph) -> bool {
        g.annihilates(&self.vector)
            && self.vector.iter().all(|e| !e.is_zero())
            && linalg::is_normalized(&self.vector)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExclusivePairError {
    #[error("vector length {found} does not match graph order {order}")]
    Dimension { found: usize, order: usize },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("vector is not in the kernel of the adjacency matrix")]
    NotKernelVector,
    #[error("vertices {0} and {1} coincide or are adjacent")]
    Adjacent(usize, usize),
    #[error("exclusive neighbourhood of {0} relative to {1} is not a single vertex")]
    NotSingleton(usize, usize),
}

/// For non-adjacent `u`, `v` whose exclusive neighbourhoods are single
/// vertices `u'` and `v'`, returns whether `x(u') == x(v')`.
///
/// The zero-sum rule at `u` and at `v` forces equality for any kernel vector,
/// so a `false` here means the inputs were not what the caller believed.
pub fn check_exclusive_pair(g: &Graph, x: &[BigInt], u: usize, v: usize) -> Result<bool, ExclusivePairError> {
    let n = g.order();
    if x.len() != n {
        return Err(ExclusivePairError::Dimension {
            found: x.len(),
            order: n,
        });
    }
    for w in [u, v] {
        if w >= n {
            return Err(ExclusivePairError::VertexOutOfRange(w));
        }
    }
    if u == v || g.has_edge(u, v) {
        return Err(ExclusivePairError::Adjacent(u, v));
    }
    if !g.annihilates(x) {
        return Err(ExclusivePairError::NotKernelVector);
    }
    let exclusive = |a: usize, b: usize| -> Result<usize, ExclusivePairError> {
        let only: Vec<usize> = g.neighbors_unchecked(a).filter(|&w| !g.has_edge(b, w)).collect();
        match only[..] {
            [w] => Ok(w),
            _ => Err(ExclusivePairError::NotSingleton(a, b)),
        }
    };
    let up = exclusive(u, v)?;
    let vp = exclusive(v, u)?;
    Ok(x[up] == x[vp])
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertificateParseError {
    #[error("expected header line `nullity <k>`")]
    Header,
    #[error("expected {expected} vector lines, found {found}")]
    LineCount { expected: usize, found: usize },
    #[error("line {0}: not a list of integers")]
    Entry(usize),
    #[error("vectors have inconsistent lengths")]
    Ragged,
}

impl KernelCertificate {
    /// Text form: `nullity k`, then one line of space-separated integers per
    /// basis vector.
    pub fn to_text(&self) -> String {
        let mut out = format!("nullity {}\n", self.nullity);
        for x in &self.basis {
            out.push_str(&join(x));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`KernelCertificate::to_text`]. The order of a
    /// nullity-zero certificate is unknown from the text and must be supplied.
    pub fn parse(text: &str, order: usize) -> Result<Self, CertificateParseError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let nullity: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("nullity "))
            .and_then(|k| k.trim().parse().ok())
            .ok_or(CertificateParseError::Header)?;
        let basis: Vec<Vec<BigInt>> = lines
            .enumerate()
            .map(|(i, l)| {
                l.split_whitespace()
                    .map(|t| t.parse::<BigInt>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| CertificateParseError::Entry(i + 2))
            })
            .collect::<Result<_, _>>()?;
        if basis.len() != nullity {
            return Err(CertificateParseError::LineCount {
                expected: nullity,
                found: basis.len(),
            });
        }
        if basis.iter().any(|x| x.len() != order) {
            return Err(CertificateParseError::Ragged);
        }
        Ok(KernelCertificate {
            order,
            nullity,
            basis,
        })
    }
}

pub(crate) fn join(x: &[BigInt]) -> String {
    x.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
