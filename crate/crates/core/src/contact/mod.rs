//! Truncated fractional power series with cyclotomic coefficients, contact
//! orders, and the Kuo-Lu tree of pseudo-balls.
//!
//! The contact order of two series is the order of their difference. It is an
//! ultrametric on any finite set of distinct series, so hierarchical
//! clustering by contact produces a rooted tree: each internal node is a
//! pseudo-ball `B` with a height `h(B)`, a child count `t(B)` and the weight
//! `q(B)` — the sum over all input roots of their contact with `B`. The
//! jacobian Newton polygon of the curve with those Puiseux roots is
//! `sum over internal B of {(t(B)-1) q(B) | t(B)-1}`.

mod cyclo;

pub use cyclo::{cyclotomic_polynomial, phi, CycloNum};

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polygon::Polygon;
use crate::rat::{fmt_rat, parse_rat, rat, BigRat};

/// Truncation order of a series: every stored exponent lies strictly below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trunc {
    Finite(BigRat),
    Infinite,
}

impl Trunc {
    fn allows(&self, exp: &BigRat) -> bool {
        match self {
            Trunc::Finite(t) => exp < t,
            Trunc::Infinite => true,
        }
    }

    fn min(&self, other: &Trunc) -> Trunc {
        match (self, other) {
            (Trunc::Infinite, t) | (t, Trunc::Infinite) => t.clone(),
            (Trunc::Finite(a), Trunc::Finite(b)) => Trunc::Finite(a.min(b).clone()),
        }
    }
}

impl fmt::Display for Trunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trunc::Finite(t) => write!(f, "{}", fmt_rat(t)),
            Trunc::Infinite => write!(f, "inf"),
        }
    }
}

/// A truncated fractional power series `sum c_e x^e` with exponents positive
/// rationals sharing the denominator `denom`, coefficients in `Q(zeta_order)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracSeries {
    order: u32,
    denom: u64,
    terms: BTreeMap<BigRat, CycloNum>,
    trunc: Trunc,
}

impl FracSeries {
    pub fn new(order: u32, terms: Vec<(BigRat, CycloNum)>, trunc: Trunc) -> Result<FracSeries> {
        if order == 0 {
            return Err(Error::BadSeries("cyclotomic order must be positive".into()));
        }
        let mut map = BTreeMap::new();
        let mut denom = 1u64;
        for (exp, coeff) in terms {
            if !exp.is_positive() {
                return Err(Error::BadSeries(format!("exponent {} is not positive", fmt_rat(&exp))));
            }
            if !trunc.allows(&exp) {
                return Err(Error::BadSeries(format!(
                    "exponent {} is not below the truncation order {}",
                    fmt_rat(&exp),
                    trunc
                )));
            }
            if coeff.order() != order {
                return Err(Error::BadSeries("coefficient from the wrong cyclotomic field".into()));
            }
            if coeff.is_zero() {
                return Err(Error::BadSeries(format!("zero coefficient at exponent {}", fmt_rat(&exp))));
            }
            let d = exp
                .denom()
                .try_into()
                .map_err(|_| Error::BadSeries("exponent denominator too large".into()))?;
            denom = denom.lcm(&d);
            if map.insert(exp.clone(), coeff).is_some() {
                return Err(Error::BadSeries(format!("duplicate exponent {}", fmt_rat(&exp))));
            }
        }
        Ok(FracSeries { order, denom, terms: map, trunc })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Common denominator of the exponents.
    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn trunc(&self) -> &Trunc {
        &self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigRat, &CycloNum)> {
        self.terms.iter()
    }
}

/// Result of comparing two series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Contact {
    /// The least exponent at which the series differ.
    Finite(BigRat),
    /// No difference strictly below the smaller truncation order; the true
    /// contact is at least that bound (truncation-limited infinity).
    AtLeast(Trunc),
}

impl fmt::Display for Contact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Contact::Finite(e) => write!(f, "{}", fmt_rat(e)),
            Contact::AtLeast(Trunc::Infinite) => write!(f, "inf"),
            Contact::AtLeast(t) => write!(f, "inf (truncation-limited at {t})"),
        }
    }
}

/// Contact order of two series: the least exponent, strictly below both
/// truncation orders, where their coefficients (compared in the compositum
/// field) differ.
pub fn contact_order(a: &FracSeries, b: &FracSeries) -> Contact {
    let target = a.order.lcm(&b.order);
    let bound = a.trunc.min(&b.trunc);
    let mut exps: Vec<&BigRat> = a.terms.keys().chain(b.terms.keys()).collect();
    exps.sort();
    exps.dedup();
    for e in exps {
        if !bound.allows(e) {
            break;
        }
        let ca = a
            .terms
            .get(e)
            .map(|c| c.embed(target).expect("order divides the lcm"))
            .unwrap_or_else(|| CycloNum::zero(target));
        let cb = b
            .terms
            .get(e)
            .map(|c| c.embed(target).expect("order divides the lcm"))
            .unwrap_or_else(|| CycloNum::zero(target));
        if ca != cb {
            return Contact::Finite(e.clone());
        }
    }
    Contact::AtLeast(bound)
}

/// One pseudo-ball of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    /// Height: the smallest pairwise contact among the members.
    pub height: BigRat,
    /// Indices of the input roots contained in this ball.
    pub members: Vec<usize>,
    pub children: Vec<ChildRef>,
    /// `q(B)`: sum over all input roots of their contact with the ball.
    pub q: BigRat,
}

impl TreeNode {
    /// Number of children, `t(B)`.
    pub fn t(&self) -> usize {
        self.children.len()
    }
}

/// A child of an internal node: another internal node or a single root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChildRef {
    Node(usize),
    Leaf(usize),
}

/// The Kuo-Lu tree of a set of pairwise distinct truncated roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactTree {
    nodes: Vec<TreeNode>,
    root: ChildRef,
    num_roots: usize,
}

impl ContactTree {
    /// Internal nodes in construction order (parents before children).
    pub fn internal_nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn num_roots(&self) -> usize {
        self.num_roots
    }

    pub fn root(&self) -> ChildRef {
        self.root
    }

    pub fn to_json(&self) -> Value {
        json!({
            "roots": self.num_roots,
            "nodes": self
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "height": fmt_rat(&n.height),
                        "t": n.t(),
                        "q": fmt_rat(&n.q),
                        "members": n.members,
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Build the Kuo-Lu tree by hierarchical clustering under the contact
/// ultrametric. Every pairwise contact must be determined strictly below the
/// truncations; coincident roots are rejected.
pub fn build_tree(roots: &[FracSeries]) -> Result<ContactTree> {
    let n = roots.len();
    if n == 0 {
        return Err(Error::NoRoots);
    }
    // Pairwise contacts; all must be finite.
    let mut contact = vec![vec![BigRat::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            match contact_order(&roots[i], &roots[j]) {
                Contact::Finite(e) => {
                    contact[i][j] = e.clone();
                    contact[j][i] = e;
                }
                Contact::AtLeast(_) => return Err(Error::AmbiguousContact { i, j }),
            }
        }
    }
    let mut nodes: Vec<TreeNode> = Vec::new();
    let root = split(&mut nodes, (0..n).collect(), &contact, n);
    Ok(ContactTree { nodes, root, num_roots: n })
}

/// Recursive partition of a member set into the children of its pseudo-ball.
fn split(
    nodes: &mut Vec<TreeNode>,
    members: Vec<usize>,
    contact: &[Vec<BigRat>],
    n: usize,
) -> ChildRef {
    if members.len() == 1 {
        return ChildRef::Leaf(members[0]);
    }
    // Height: the minimum pairwise contact within the ball.
    let mut height: Option<&BigRat> = None;
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            let c = &contact[i][j];
            if height.map(|h| c < h).unwrap_or(true) {
                height = Some(c);
            }
        }
    }
    let height = height.expect("at least one pair").clone();
    // q(B) = |B| * h(B) + contacts of outsiders with any member.
    let inside = rat(members.len() as i64) * &height;
    let outside = (0..n)
        .filter(|r| !members.contains(r))
        .fold(BigRat::zero(), |acc, r| acc + &contact[members[0]][r]);
    // Children: classes of the relation "contact strictly above the height".
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &i in &members {
        match classes.iter_mut().find(|cl| contact[cl[0]][i] > height) {
            Some(cl) => cl.push(i),
            None => classes.push(vec![i]),
        }
    }
    debug_assert!(classes.len() >= 2, "minimal pair separates");
    let idx = nodes.len();
    nodes.push(TreeNode {
        height,
        members,
        children: Vec::with_capacity(classes.len()),
        q: inside + outside,
    });
    for class in classes {
        let child = split(nodes, class, contact, n);
        nodes[idx].children.push(child);
    }
    ChildRef::Node(idx)
}

/// The jacobian Newton polygon read off a tree:
/// `sum over internal B of {(t(B)-1) q(B) | t(B)-1}`.
pub fn tree_polygon(tree: &ContactTree) -> Polygon {
    let terms = tree
        .internal_nodes()
        .iter()
        .map(|node| {
            let t1 = rat(node.t() as i64 - 1);
            (&t1 * &node.q, t1)
        })
        .collect();
    Polygon::new(terms, true, true).expect("positive extents")
}

// --- roots file (JSON) ------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct RootsFile {
    pub cyclotomic_order: u32,
    pub roots: Vec<RootSpec>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RootSpec {
    pub terms: Vec<TermSpec>,
    pub trunc: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermSpec {
    /// Exponent as a rational string, e.g. `"5/3"`.
    pub exp: String,
    /// Power-basis coordinates in Q(zeta_order), rational strings.
    pub coeff: Vec<String>,
}

/// Parse the JSON roots-file format into series over the declared field.
pub fn parse_roots_file(text: &str) -> Result<Vec<FracSeries>> {
    let file: RootsFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let order = file.cyclotomic_order;
    file.roots
        .iter()
        .map(|spec| {
            let trunc = if spec.trunc.trim() == "inf" {
                Trunc::Infinite
            } else {
                Trunc::Finite(parse_rat(&spec.trunc)?)
            };
            let terms = spec
                .terms
                .iter()
                .map(|t| {
                    let exp = parse_rat(&t.exp)?;
                    let coords =
                        t.coeff.iter().map(|c| parse_rat(c)).collect::<Result<Vec<_>>>()?;
                    Ok((exp, CycloNum::new(order, coords)?))
                })
                .collect::<Result<Vec<_>>>()?;
            FracSeries::new(order, terms, trunc)
        })
        .collect()
}
