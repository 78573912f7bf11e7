//! Exact big-integer evaluation of every explicit threshold formula.

use crate::model::{BoundRequest, TheoremId};
use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),
    #[error("parameter `{name}` = {value} is out of range for {theorem:?}")]
    BadParam {
        name: &'static str,
        value: u64,
        theorem: TheoremId,
    },
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// (s-1)(n-1) + 1
pub fn es_bound(s: u64, n: u64) -> BigUint {
    BigUint::from((s - 1) * (n - 1) + 1)
}

/// C(s+n-4, s-2) + 1
pub fn cups_caps_bound(s: u64, n: u64) -> BigUint {
    binomial(s + n - 4, s - 2) + 1u32
}

/// (24 s^3)^(s t) * n
pub fn thm11_bound(s: u64, t: u64, n: u64) -> BigUint {
    let base = BigUint::from(24u32) * BigUint::from(s).pow(3);
    base.pow((s * t) as u32) * BigUint::from(n)
}

/// 2^(2t-1) * n^(t (2t-1))
pub fn thm12_bound(t: u64, n: u64) -> BigUint {
    BigUint::from(2u32).pow((2 * t - 1) as u32) * BigUint::from(n).pow((t * (2 * t - 1)) as u32)
}

/// (400 t^3)^(t^2) * n^(4t-2)
pub fn thm13_bound(t: u64, n: u64) -> BigUint {
    let base = BigUint::from(400u32) * BigUint::from(t).pow(3);
    base.pow((t * t) as u32) * BigUint::from(n).pow((4 * t - 2) as u32)
}

/// C(p+q-2, p-1) + 1: least N guaranteeing a non-increasing-label path with
/// p edges or a strictly-increasing-label path with q edges.
pub fn ck_threshold(p: u64, q: u64) -> BigUint {
    binomial(p + q - 2, p - 1) + 1u32
}

/// Exponent constant: C(2,t) = t-1 and C(s,t) = (s+t) C(s-1, t+1) + s - 1.
pub fn canonical_c(s: u64, t: u64) -> BigUint {
    if s == 2 {
        BigUint::from(t - 1)
    } else {
        BigUint::from(s + t) * canonical_c(s - 1, t + 1) + BigUint::from(s - 1)
    }
}

/// Recursive upper bound F on the labeled-structure threshold:
/// F(n; 2, t) = C(n+t-1, t-1) + 1 and F(n; s, t) = F(n; s-1, t+1)^(s+t) n^(s-1).
pub fn f_bound(n: u64, s: u64, t: u64) -> BigUint {
    if s == 2 {
        ck_threshold(t, n + 1)
    } else {
        f_bound(n, s - 1, t + 1).pow((s + t) as u32) * BigUint::from(n).pow((s - 1) as u32)
    }
}

/// 3 (4 s^2)^t
pub fn rednet_order(s: u64, t: u64) -> BigUint {
    BigUint::from(3u32) * (BigUint::from(4u32) * BigUint::from(s) * BigUint::from(s)).pow(t as u32)
}

fn need(req: &BoundRequest, name: &'static str, min: u64) -> Result<u64, BoundError> {
    let v = *req.params.get(name).ok_or(BoundError::MissingParam(name))?;
    if v < min {
        return Err(BoundError::BadParam {
            name,
            value: v,
            theorem: req.theorem,
        });
    }
    Ok(v)
}

/// Evaluates the requested formula exactly; no overflow at any parameter size.
pub fn bound_calculator(req: &BoundRequest) -> Result<BigUint, BoundError> {
    match req.theorem {
        TheoremId::Es => Ok(es_bound(need(req, "s", 1)?, need(req, "n", 1)?)),
        TheoremId::CupsCaps => Ok(cups_caps_bound(need(req, "s", 2)?, need(req, "n", 2)?)),
        TheoremId::Thm1_1 => Ok(thm11_bound(
            need(req, "s", 1)?,
            need(req, "t", 1)?,
            need(req, "n", 1)?,
        )),
        TheoremId::Thm1_2 => Ok(thm12_bound(need(req, "t", 1)?, need(req, "n", 1)?)),
        TheoremId::Thm1_3 => Ok(thm13_bound(need(req, "t", 1)?, need(req, "n", 1)?)),
        TheoremId::Ck => Ok(ck_threshold(need(req, "p", 1)?, need(req, "q", 1)?)),
        TheoremId::CanonicalC => Ok(canonical_c(need(req, "s", 2)?, need(req, "t", 1)?)),
        TheoremId::FBound => Ok(f_bound(
            need(req, "n", 1)?,
            need(req, "s", 2)?,
            need(req, "t", 1)?,
        )),
        TheoremId::RedNetOrder => Ok(rednet_order(need(req, "s", 1)?, need(req, "t", 1)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn req(theorem: TheoremId, params: &[(&str, u64)]) -> BoundRequest {
        BoundRequest {
            theorem,
            params: params
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect::<BTreeMap<_, _>>(),
        }
    }

    #[test]
    fn spec_values() {
        assert_eq!(
            bound_calculator(&req(TheoremId::Es, &[("s", 3), ("n", 5)])).unwrap(),
            BigUint::from(9u32)
        );
        assert_eq!(
            bound_calculator(&req(TheoremId::CupsCaps, &[("s", 4), ("n", 4)])).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(
            bound_calculator(&req(TheoremId::CanonicalC, &[("s", 2), ("t", 5)])).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            bound_calculator(&req(TheoremId::RedNetOrder, &[("s", 2), ("t", 2)])).unwrap(),
            BigUint::from(768u32)
        );
    }

    #[test]
    fn canonical_c_satisfies_recursion() {
        for s in 3..=8u64 {
            for t in 1..=(9 - s) {
                assert_eq!(
                    canonical_c(s, t),
                    BigUint::from(s + t) * canonical_c(s - 1, t + 1) + BigUint::from(s - 1),
                    "recursion fails at ({s}, {t})"
                );
            }
        }
    }

    #[test]
    fn thm11_at_unit_params_is_linear() {
        assert_eq!(thm11_bound(1, 1, 10), BigUint::from(240u32));
    }

    #[test]
    fn missing_param_is_reported() {
        let e = bound_calculator(&req(TheoremId::Es, &[("s", 3)])).unwrap_err();
        assert_eq!(e, BoundError::MissingParam("n"));
    }

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(5, 0), BigUint::from(1u32));
        assert_eq!(binomial(4, 6), BigUint::from(0u32));
    }
}
