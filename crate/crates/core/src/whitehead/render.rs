use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::whitehead::{WhiteheadExpr, WhiteheadIdentity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExprDocument {
    pub non_face: Vec<u32>,
    pub ordering: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    pub coeff: i64,
    pub non_face: Vec<u32>,
    pub ordering: Vec<u32>,
}

/// Serialized form of an identity; field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityDocument {
    pub lhs: ExprDocument,
    pub rhs: Vec<TermDocument>,
    pub pure: bool,
    pub unique: bool,
}

impl From<&WhiteheadIdentity> for IdentityDocument {
    fn from(id: &WhiteheadIdentity) -> Self {
        let parts = |e: &WhiteheadExpr| {
            (e.non_face().members().vertices().to_vec(), e.ordering().order().to_vec())
        };
        let (non_face, ordering) = parts(&id.lhs);
        IdentityDocument {
            lhs: ExprDocument { non_face, ordering },
            rhs: id
                .rhs
                .iter()
                .map(|(coeff, e)| {
                    let (non_face, ordering) = parts(e);
                    TermDocument { coeff: *coeff, non_face, ordering }
                })
                .collect(),
            pure: id.pure,
            unique: id.unique,
        }
    }
}

pub fn render(id: &WhiteheadIdentity, format: Format) -> String {
    match format {
        Format::Text => render_text(id),
        Format::Latex => render_latex(id),
        Format::Json => render_document(&IdentityDocument::from(id)),
    }
}

pub fn render_document(doc: &IdentityDocument) -> String {
    serde_json::to_string_pretty(doc).expect("plain data serializes")
}

pub fn parse_identity_json(text: &str) -> Result<IdentityDocument> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

/// Appends `c·name` to a running sum; `sep` puts spaces around the sign.
fn push_term(out: &mut String, first: bool, c: i64, name: &str, times: &str, sep: bool) {
    let mag = c.unsigned_abs();
    let sign = if c < 0 { "-" } else { "+" };
    match (first, sep) {
        (true, _) if c < 0 => out.push('-'),
        (true, _) => {}
        (false, true) => {
            let _ = write!(out, " {sign} ");
        }
        (false, false) => out.push_str(sign),
    }
    if mag != 1 {
        let _ = write!(out, "{mag}{times}");
    }
    out.push_str(name);
}

fn render_text(id: &WhiteheadIdentity) -> String {
    let mut out = format!("w_{} = ", id.lhs.label());
    if id.rhs.is_empty() {
        out.push('0');
    }
    for (n, (c, e)) in id.rhs.iter().enumerate() {
        push_term(&mut out, n == 0, *c, &format!("w_{}", e.label()), "*", true);
    }
    out
}

/// Index `i` when `e` is the complement of `i` in the ground set.
fn sigma_index(e: &WhiteheadExpr) -> Option<u32> {
    let m = e.rho().len();
    if e.non_face().len() + 1 != m {
        return None;
    }
    e.ordering().order().first().copied()
}

fn render_latex(id: &WhiteheadIdentity) -> String {
    let all_sigma = std::iter::once(&id.lhs)
        .chain(id.rhs.iter().map(|(_, e)| e))
        .all(|e| sigma_index(e).is_some());
    let name = |e: &WhiteheadExpr| match sigma_index(e) {
        Some(i) if all_sigma => format!("w_{{\\sigma_{i}}}"),
        _ => format!("w_{{{}}}", e.label()),
    };
    let mut terms: Vec<&(i64, WhiteheadExpr)> = id.rhs.iter().collect();
    if all_sigma {
        terms.sort_by_key(|(_, e)| sigma_index(e));
    }
    let mut out = format!("{}=", name(&id.lhs));
    if terms.is_empty() {
        out.push('0');
    }
    for (n, (c, e)) in terms.into_iter().enumerate() {
        push_term(&mut out, n == 0, *c, &name(e), "", false);
    }
    out
}
