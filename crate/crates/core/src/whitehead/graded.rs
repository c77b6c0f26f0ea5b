//! Specialization of identities to sphere wedges, where binary Whitehead
//! products become graded Lie brackets.
//!
//! Generator `e_i` has Lie degree `p_i` for `X_i = S^{p_i}`. A term `w_M ∘ ρ`
//! picks up the Koszul sign of `ρ` permuting the smash factors, and inner
//! binary brackets are reoriented by graded antisymmetry
//! `[x, y] = −(−1)^{|x||y|} [y, x]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::whitehead::{WhiteheadExpr, WhiteheadIdentity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereGrading {
    degrees: BTreeMap<u32, u32>,
}

impl SphereGrading {
    pub fn new(degrees: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let degrees: BTreeMap<u32, u32> = degrees.into_iter().collect();
        if let Some((&i, _)) = degrees.iter().find(|(_, &p)| p == 0) {
            return Err(Error::DegreeZero(i));
        }
        Ok(SphereGrading { degrees })
    }

    /// Degrees `p_1, p_2, …` for generators `1, 2, …`.
    pub fn from_list(ps: &[u32]) -> Result<Self> {
        Self::new(ps.iter().enumerate().map(|(i, &p)| (i as u32 + 1, p)))
    }

    pub fn degree(&self, i: u32) -> Result<u32> {
        self.degrees
            .get(&i)
            .copied()
            .ok_or_else(|| Error::ParameterRange(format!("no degree given for e{i}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bracket {
    Gen(u32),
    /// Higher product `w(j_1, …, j_l)`, kept symbolic.
    Opaque(Vec<u32>),
    Pair(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn pair(a: Bracket, b: Bracket) -> Bracket {
        Bracket::Pair(Box::new(a), Box::new(b))
    }

    /// Generators in reading order.
    pub fn letters(&self) -> Vec<u32> {
        match self {
            Bracket::Gen(i) => vec![*i],
            Bracket::Opaque(v) => v.clone(),
            Bracket::Pair(a, b) => {
                let mut v = a.letters();
                v.extend(b.letters());
                v
            }
        }
    }

    pub fn degree(&self, g: &SphereGrading) -> Result<u32> {
        self.letters().into_iter().map(|i| g.degree(i)).sum()
    }

    fn is_binary(&self) -> bool {
        match self {
            Bracket::Gen(_) => true,
            Bracket::Opaque(_) => false,
            Bracket::Pair(a, b) => a.is_binary() && b.is_binary(),
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Gen(i) => write!(f, "e{i}"),
            Bracket::Opaque(v) => write!(f, "w({})", v.iter().join(",")),
            Bracket::Pair(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedBracketTerm {
    pub coeff: i64,
    pub bracket: Bracket,
}

impl fmt::Display for GradedBracketTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coeff {
            1 => write!(f, "{}", self.bracket),
            -1 => write!(f, "-{}", self.bracket),
            c => write!(f, "{c}*{}", self.bracket),
        }
    }
}

/// Writes `Σ terms = 0` with signs separated out.
pub fn format_terms(terms: &[GradedBracketTerm]) -> String {
    if terms.is_empty() {
        return "0 = 0".into();
    }
    let mut out = String::new();
    for (n, t) in terms.iter().enumerate() {
        let mag = t.coeff.abs();
        let body = if mag == 1 { t.bracket.to_string() } else { format!("{mag}*{}", t.bracket) };
        match (n, t.coeff < 0) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
            (_, true) => out.push_str(&format!(" - {body}")),
        }
    }
    out.push_str(" = 0");
    out
}

fn parity_sign(exp: u64) -> i64 {
    if exp.is_multiple_of(2) { 1 } else { -1 }
}

/// Sign of reordering smash factors of degrees `p_{ρ(1)}, …, p_{ρ(m)}` into
/// ascending index order.
pub fn koszul_sign(rho: &[u32], g: &SphereGrading) -> Result<i64> {
    let mut exp = 0u64;
    for (a, b) in rho.iter().tuple_combinations() {
        if a > b {
            exp += u64::from(g.degree(*a)?) * u64::from(g.degree(*b)?);
        }
    }
    Ok(parity_sign(exp))
}

fn cyclic_descents(seq: &[u32]) -> usize {
    seq.iter().circular_tuple_windows().filter(|(a, b)| a > b).count()
}

/// The bracket for one expression and the sign it contributes.
fn normalize_expr(e: &WhiteheadExpr, g: &SphereGrading) -> Result<(i64, Bracket)> {
    let mut sign = koszul_sign(e.rho(), g)?;
    let members = e.non_face().members().vertices();
    let order = e.ordering().order();
    let inner = match members {
        &[a, b] => {
            let forward: Vec<u32> = [a, b].iter().chain(order).copied().collect();
            let reverse: Vec<u32> = [b, a].iter().chain(order).copied().collect();
            if cyclic_descents(&reverse) < cyclic_descents(&forward) {
                sign *= -parity_sign(u64::from(g.degree(a)?) * u64::from(g.degree(b)?));
                Bracket::pair(Bracket::Gen(b), Bracket::Gen(a))
            } else {
                Bracket::pair(Bracket::Gen(a), Bracket::Gen(b))
            }
        }
        _ => Bracket::Opaque(members.to_vec()),
    };
    let bracket = order.iter().fold(inner, |acc, &i| Bracket::pair(acc, Bracket::Gen(i)));
    Ok((sign, bracket))
}

/// Rewrites `lhs − Σ c·rhs = 0` as signed brackets, collected and sorted by
/// reading order. The overall sign is chosen so that positive terms are not
/// outnumbered, with the first term positive on a tie.
pub fn specialize_spheres(id: &WhiteheadIdentity, g: &SphereGrading) -> Result<Vec<GradedBracketTerm>> {
    let size = id.lhs.non_face().len();
    if let Some((_, e)) = id.rhs.iter().find(|(_, e)| e.non_face().len() != size) {
        return Err(Error::UnsupportedShape(format!(
            "w({}) and w({}) have different arity",
            id.lhs.label(),
            e.label()
        )));
    }
    let mut collected: BTreeMap<(Vec<u32>, Bracket), i64> = BTreeMap::new();
    for (c, e) in std::iter::once((1, &id.lhs)).chain(id.rhs.iter().map(|(c, e)| (-c, e))) {
        let (sign, b) = normalize_expr(e, g)?;
        *collected.entry((b.letters(), b)).or_default() += c * sign;
    }
    let mut terms: Vec<GradedBracketTerm> = collected
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((_, bracket), coeff)| GradedBracketTerm { coeff, bracket })
        .collect();
    let pos = terms.iter().filter(|t| t.coeff > 0).count();
    let neg = terms.len() - pos;
    if neg > pos || (neg == pos && terms.first().is_some_and(|t| t.coeff < 0)) {
        for t in &mut terms {
            t.coeff = -t.coeff;
        }
    }
    Ok(terms)
}

type Poly = HashMap<Vec<u32>, i64>;

/// Image in the tensor algebra, where `[x, y] = xy − (−1)^{|x||y|} yx`.
fn expand(b: &Bracket, g: &SphereGrading) -> Result<(u32, Poly)> {
    match b {
        Bracket::Gen(i) => Ok((g.degree(*i)?, Poly::from([(vec![*i], 1)]))),
        Bracket::Opaque(v) => Err(Error::UnsupportedShape(format!(
            "w({}) has no Lie model",
            v.iter().join(",")
        ))),
        Bracket::Pair(x, y) => {
            let (dx, px) = expand(x, g)?;
            let (dy, py) = expand(y, g)?;
            let swap = -parity_sign(u64::from(dx) * u64::from(dy));
            let mut out = Poly::new();
            for (u, cu) in &px {
                for (v, cv) in &py {
                    let uv: Vec<u32> = u.iter().chain(v).copied().collect();
                    let vu: Vec<u32> = v.iter().chain(u).copied().collect();
                    *out.entry(uv).or_default() += cu * cv;
                    *out.entry(vu).or_default() += swap * cu * cv;
                }
            }
            out.retain(|_, c| *c != 0);
            Ok((dx + dy, out))
        }
    }
}

/// Whether `Σ terms` vanishes in the free graded Lie algebra over the
/// rationals. The free Lie algebra embeds in its enveloping tensor algebra,
/// so the sum is expanded there and compared with zero.
pub fn graded_lie_check(terms: &[GradedBracketTerm], g: &SphereGrading) -> Result<bool> {
    let mut total = Poly::new();
    for t in terms {
        if !t.bracket.is_binary() {
            return Err(Error::UnsupportedShape(format!("{} is not a binary bracket", t.bracket)));
        }
        let (_, p) = expand(&t.bracket, g)?;
        for (w, c) in p {
            *total.entry(w).or_default() += t.coeff * c;
        }
    }
    Ok(total.values().all(|&c| c == 0))
}
