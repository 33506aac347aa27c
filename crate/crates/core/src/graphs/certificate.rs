use std::fmt;

use thiserror::Error;

use crate::complexes::HomologyResult;

/// Formal homotopy-type expression for an independence complex.
///
/// `Unknown(i)` stands for the complex of the `i`-th residual graph that no
/// reduction move could simplify.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum HomotopyCertificate {
    Sphere(i32),
    Wedge(Vec<HomotopyCertificate>),
    Join(Vec<HomotopyCertificate>),
    Susp(Box<HomotopyCertificate>),
    Contractible,
    Unknown(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate has an unresolved branch (residual graph #{0})")]
    Unresolved(usize),
    #[error("no homology supplied for residual graph #{0}")]
    MissingResidual(usize),
}

use HomotopyCertificate::*;

impl HomotopyCertificate {
    pub fn is_resolved(&self) -> bool {
        match self {
            Unknown(_) => false,
            Sphere(_) | Contractible => true,
            Susp(c) => c.is_resolved(),
            Wedge(cs) | Join(cs) => cs.iter().all(HomotopyCertificate::is_resolved),
        }
    }

    /// Rewrites to normal form: `Susp(X) → J(S⁰, X)`, `S^a ∗ S^b → S^{a+b+1}`,
    /// `S^{-1}` dropped from joins, joins distributed over wedges, joins with a
    /// contractible factor collapsed, wedges flattened and sorted, and
    /// contractible wedge summands removed.
    pub fn normalize(&self) -> HomotopyCertificate {
        let mut c = self.clone();
        while let Some(next) = c.rewrite_at(0) {
            c = next;
        }
        c
    }

    /// Number of redexes (positions where some rule applies).
    pub fn redex_count(&self) -> usize {
        let here = usize::from(self.rule_here().is_some());
        let below: usize = match self {
            Susp(c) => c.redex_count(),
            Wedge(cs) | Join(cs) => cs.iter().map(HomotopyCertificate::redex_count).sum(),
            _ => 0,
        };
        here + below
    }

    /// Applies the rule at the `k`-th redex in pre-order, if there is one.
    /// Exposed so tests can drive arbitrary rewrite orders.
    pub fn rewrite_at(&self, k: usize) -> Option<HomotopyCertificate> {
        let mut k = k;
        self.rewrite_nth(&mut k)
    }

    fn rewrite_nth(&self, k: &mut usize) -> Option<HomotopyCertificate> {
        if let Some(r) = self.rule_here() {
            if *k == 0 {
                return Some(r);
            }
            *k -= 1;
        }
        match self {
            Susp(c) => c.rewrite_nth(k).map(|c| Susp(Box::new(c))),
            Wedge(cs) | Join(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if let Some(r) = c.rewrite_nth(k) {
                        let mut v = cs.clone();
                        v[i] = r;
                        return Some(if matches!(self, Wedge(_)) { Wedge(v) } else { Join(v) });
                    }
                }
                None
            }
            _ => None,
        }
    }

    /// The single rewrite rule applicable at the root, if any.
    fn rule_here(&self) -> Option<HomotopyCertificate> {
        match self {
            Susp(c) => Some(Join(vec![Sphere(0), (**c).clone()])),
            Join(cs) => {
                if cs.is_empty() {
                    return Some(Sphere(-1));
                }
                if cs.len() == 1 {
                    return Some(cs[0].clone());
                }
                if cs.iter().any(|c| matches!(c, Join(_))) {
                    let flat = cs.iter().flat_map(|c| match c {
                        Join(inner) => inner.clone(),
                        other => vec![other.clone()],
                    });
                    return Some(Join(flat.collect()));
                }
                if cs.contains(&Sphere(-1)) {
                    return Some(Join(cs.iter().filter(|c| **c != Sphere(-1)).cloned().collect()));
                }
                if cs.contains(&Contractible) {
                    return Some(Contractible);
                }
                // combine the first two spheres
                let spheres: Vec<usize> =
                    cs.iter().enumerate().filter(|(_, c)| matches!(c, Sphere(_))).map(|(i, _)| i).take(2).collect();
                if let [i, j] = spheres[..] {
                    let (Sphere(a), Sphere(b)) = (&cs[i], &cs[j]) else { unreachable!() };
                    let mut v = cs.clone();
                    v[i] = Sphere(a + b + 1);
                    v.remove(j);
                    return Some(Join(v));
                }
                // distribute over the first wedge
                if let Some(w) = cs.iter().position(|c| matches!(c, Wedge(_))) {
                    let Wedge(parts) = &cs[w] else { unreachable!() };
                    let terms = parts
                        .iter()
                        .map(|p| {
                            let mut v = cs.clone();
                            v[w] = p.clone();
                            Join(v)
                        })
                        .collect();
                    return Some(Wedge(terms));
                }
                None
            }
            Wedge(cs) => {
                if cs.is_empty() {
                    return Some(Contractible);
                }
                if cs.len() == 1 {
                    return Some(cs[0].clone());
                }
                if cs.iter().any(|c| matches!(c, Wedge(_))) {
                    let flat = cs.iter().flat_map(|c| match c {
                        Wedge(inner) => inner.clone(),
                        other => vec![other.clone()],
                    });
                    return Some(Wedge(flat.collect()));
                }
                if cs.contains(&Contractible) {
                    return Some(Wedge(cs.iter().filter(|c| **c != Contractible).cloned().collect()));
                }
                let mut sorted = cs.clone();
                sorted.sort();
                if sorted != *cs {
                    return Some(Wedge(sorted));
                }
                None
            }
            Sphere(_) | Contractible | Unknown(_) => None,
        }
    }

    /// Replaces each `Unknown(i)` leaf by `f(i)`.
    pub fn substitute(&self, f: &impl Fn(usize) -> HomotopyCertificate) -> HomotopyCertificate {
        match self {
            Unknown(i) => f(*i),
            Sphere(_) | Contractible => self.clone(),
            Susp(c) => Susp(Box::new(c.substitute(f))),
            Wedge(cs) => Wedge(cs.iter().map(|c| c.substitute(f)).collect()),
            Join(cs) => Join(cs.iter().map(|c| c.substitute(f)).collect()),
        }
    }

    /// Reduced homology of a resolved certificate.
    pub fn homology(&self) -> Result<HomologyResult, CertificateError> {
        self.homology_with(&[]).map_err(|e| match e {
            CertificateError::MissingResidual(i) => CertificateError::Unresolved(i),
            e => e,
        })
    }

    /// Reduced homology with `Unknown(i)` read from `residual[i]`. Joins use
    /// the Künneth formula, wedges add, suspension shifts by one.
    pub fn homology_with(&self, residual: &[HomologyResult]) -> Result<HomologyResult, CertificateError> {
        Ok(match self {
            Sphere(d) => HomologyResult::sphere(*d),
            Contractible => HomologyResult::zero(),
            Unknown(i) => residual.get(*i).cloned().ok_or(CertificateError::MissingResidual(*i))?,
            Susp(c) => c.homology_with(residual)?.shift(1),
            Wedge(cs) => {
                let mut h = HomologyResult::zero();
                for c in cs {
                    h = h.direct_sum(&c.homology_with(residual)?);
                }
                h
            }
            Join(cs) => {
                let mut h = HomologyResult::sphere(-1);
                for c in cs {
                    h = h.join(&c.homology_with(residual)?);
                }
                h
            }
        })
    }
}

/// Reduced homology of a normalized, fully resolved certificate.
pub fn certificate_homology(c: &HomotopyCertificate) -> Result<HomologyResult, CertificateError> {
    c.homology()
}

impl fmt::Display for HomotopyCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, head: &str, cs: &[HomotopyCertificate]) -> fmt::Result {
            write!(f, "{head}(")?;
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")
        }
        match self {
            Sphere(d) => write!(f, "S({d})"),
            Wedge(cs) => list(f, "W", cs),
            Join(cs) => list(f, "J", cs),
            Susp(c) => write!(f, "Susp({c})"),
            Contractible => write!(f, "pt"),
            Unknown(_) => write!(f, "?"),
        }
    }
}
