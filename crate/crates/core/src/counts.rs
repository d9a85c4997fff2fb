//! Closed-form counts for rectangles, chords, and the VCR poset, all in
//! arbitrary precision. Object-level modules cap n at 62; nothing here does.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// C(n, k) for machine-sized n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// C(m, 2) for an arbitrary-precision m.
pub fn choose_two(m: &BigUint) -> BigUint {
    if m < &BigUint::from(2u32) {
        return BigUint::zero();
    }
    m * (m - BigUint::one()) / BigUint::from(2u32)
}

pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

fn pow3(e: u32) -> BigUint {
    BigUint::from(3u32).pow(e)
}

/// Divides exactly, panicking if a remainder appears; the formulas here are
/// all integral by construction.
fn exact_div(num: BigUint, den: u64) -> BigUint {
    let den = BigUint::from(den);
    debug_assert!((&num % &den).is_zero(), "non-integral closed form");
    num / den
}

/// r_n = 2^{n−3}(3^n − 2^{n+1} + 1), computed as (3^n − 2^{n+1} + 1)·2^n / 8
/// so that n = 2 stays integral.
pub fn rect_total(n: u32) -> BigUint {
    assert!(n >= 2);
    let inner = pow3(n) + BigUint::one() - pow2(u64::from(n) + 1);
    exact_div(inner << n, 8)
}

/// r_n(x) = (3^n − 2^{n+1} + 1)/2: rectangles through a fixed vertex.
pub fn rect_per_vertex(n: u32) -> BigUint {
    assert!(n >= 2);
    let inner = pow3(n) + BigUint::one() - pow2(u64::from(n) + 1);
    exact_div(inner, 2)
}

/// Raw type-i count C(n,i)·2^{i−1}·C(2^{n−i}, 2). Each rectangle is counted
/// under both of its type labels, so these sum to 2·r_n.
pub fn per_type_raw(n: u32, i: u32) -> BigUint {
    assert!((1..=n).contains(&i));
    binomial(n.into(), i.into()) * pow2(u64::from(i) - 1) * choose_two(&pow2(u64::from(n - i)))
}

/// Rectangles of diagonal dimension i: C(n,i)·2^{n−i}·C(2^{i−1}, 2).
pub fn per_dim(n: u32, i: u32) -> BigUint {
    assert!((2..=n).contains(&i));
    binomial(n.into(), i.into()) * pow2(u64::from(n - i)) * choose_two(&pow2(u64::from(i) - 1))
}

/// Central rectangles: C(2^{n−1}, 2), one per unordered pair of diagonals.
pub fn central_count(n: u32) -> BigUint {
    choose_two(&pow2(u64::from(n) - 1))
}

/// i-chords: C(n,i)·2^{n−1}.
pub fn chord_count(n: u32, i: u32) -> BigUint {
    assert!((1..=n).contains(&i));
    binomial(n.into(), i.into()) * pow2(u64::from(n) - 1)
}

/// d-inclusions of an i-chord: 2^{i−1} − 1.
pub fn d_inclusion(i: u32) -> BigUint {
    pow2(u64::from(i) - 1) - BigUint::one()
}

/// s-inclusions of an i-chord: 2^{n−i} − 1.
pub fn s_inclusion(n: u32, i: u32) -> BigUint {
    pow2(u64::from(n - i)) - BigUint::one()
}

/// |V ∪ C ∪ R| = 2^{n−3}(3^n + 2^{n+2} − 2^{n+1} + 5), again scaled through
/// 2^n/8 to stay integral at n = 2.
pub fn vcr_poset_size(n: u32) -> BigUint {
    assert!(n >= 2);
    let inner = pow3(n) + pow2(u64::from(n) + 2) + BigUint::from(5u32) - pow2(u64::from(n) + 1);
    exact_div(inner << n, 8)
}

/// Identity (*): r_n = 2^{n−3} Σ_{i=1}^{n−1} C(n,i)(2^{n−i} − 1).
pub fn star_identity_sum(n: u32) -> BigUint {
    assert!(n >= 2);
    let mut sum = BigUint::zero();
    for i in 1..n {
        sum += binomial(n.into(), i.into()) * (pow2(u64::from(n - i)) - BigUint::one());
    }
    exact_div(sum << n, 8)
}

/// Type-route total: ½ Σ_i perTypeRaw[i], the first proof's count.
pub fn type_sum(n: u32) -> BigUint {
    let mut sum = BigUint::zero();
    for i in 1..=n {
        sum += per_type_raw(n, i);
    }
    exact_div(sum, 2)
}

/// Dimension-route total: Σ_{i=2}^{n} perDim[i], the second proof's count.
pub fn dim_sum(n: u32) -> BigUint {
    let mut sum = BigUint::zero();
    for i in 2..=n {
        sum += per_dim(n, i);
    }
    sum
}

/// Chord recount with all inclusions: ⅙ Σ_i chordCount[i]·(2^{i−1} + 2^{n−i} − 2).
pub fn chord_recount_full(n: u32) -> BigUint {
    let mut sum = BigUint::zero();
    for i in 1..=n {
        sum += chord_count(n, i) * (d_inclusion(i) + s_inclusion(n, i));
    }
    exact_div(sum, 6)
}

/// Chord recount over d-inclusions only: ½ Σ_i chordCount[i]·(2^{i−1} − 1).
pub fn chord_recount_d(n: u32) -> BigUint {
    let mut sum = BigUint::zero();
    for i in 1..=n {
        sum += chord_count(n, i) * d_inclusion(i);
    }
    exact_div(sum, 2)
}

/// Chord recount over s-inclusions only: ¼ Σ_i chordCount[i]·(2^{n−i} − 1).
pub fn chord_recount_s(n: u32) -> BigUint {
    let mut sum = BigUint::zero();
    for i in 1..=n {
        sum += chord_count(n, i) * s_inclusion(n, i);
    }
    exact_div(sum, 4)
}

/// Every closed-form count for one n. Serialized with decimal-string
/// integers so arbitrary precision survives JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: u32,
    #[serde(serialize_with = "ser_big")]
    pub r_n: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub r_n_vertex: BigUint,
    /// Double-counted type totals, i = 1..=n−1.
    #[serde(serialize_with = "ser_indexed")]
    pub per_type_raw: Vec<(u32, BigUint)>,
    /// Rectangles of diagonal dimension i, i = 2..=n.
    #[serde(serialize_with = "ser_indexed")]
    pub per_dim: Vec<(u32, BigUint)>,
    #[serde(serialize_with = "ser_big")]
    pub central_count: BigUint,
    /// i-chord totals, i = 1..=n.
    #[serde(serialize_with = "ser_indexed")]
    pub chord_count: Vec<(u32, BigUint)>,
    /// Per-i-chord d-inclusion count, i = 1..=n.
    #[serde(serialize_with = "ser_indexed")]
    pub d_inclusion: Vec<(u32, BigUint)>,
    /// Per-i-chord s-inclusion count, i = 1..=n.
    #[serde(serialize_with = "ser_indexed")]
    pub s_inclusion: Vec<(u32, BigUint)>,
    #[serde(serialize_with = "ser_big")]
    pub vcr_poset_size: BigUint,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_indexed<S: serde::Serializer>(v: &[(u32, BigUint)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    #[derive(Serialize)]
    struct Entry<'a> {
        i: u32,
        count: &'a str,
    }
    for (i, c) in v {
        seq.serialize_element(&Entry { i: *i, count: &c.to_string() })?;
    }
    seq.end()
}

pub fn closed_form_counts(n: u32) -> CountReport {
    assert!(n >= 2, "counting formulas need n >= 2");
    CountReport {
        n,
        r_n: rect_total(n),
        r_n_vertex: rect_per_vertex(n),
        per_type_raw: (1..n).map(|i| (i, per_type_raw(n, i))).collect(),
        per_dim: (2..=n).map(|i| (i, per_dim(n, i))).collect(),
        central_count: central_count(n),
        chord_count: (1..=n).map(|i| (i, chord_count(n, i))).collect(),
        d_inclusion: (1..=n).map(|i| (i, d_inclusion(i))).collect(),
        s_inclusion: (1..=n).map(|i| (i, s_inclusion(n, i))).collect(),
        vcr_poset_size: vcr_poset_size(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn rect_totals_small() {
        let expected = [(2, 1u64), (3, 12), (4, 100), (5, 720), (6, 4816), (7, 30912)];
        for (n, r) in expected {
            assert_eq!(rect_total(n), big(r), "r_{n}");
        }
    }

    #[test]
    fn per_vertex_small() {
        assert_eq!(rect_per_vertex(3), big(6));
        assert_eq!(rect_per_vertex(4), big(25));
        assert_eq!(rect_per_vertex(5), big(90));
        assert_eq!(rect_per_vertex(6), big(301));
    }

    #[test]
    fn report_n3_examples() {
        let r = closed_form_counts(3);
        assert_eq!(r.r_n, big(12));
        assert_eq!(r.r_n_vertex, big(6));
        assert_eq!(r.central_count, big(6));
        assert_eq!(r.vcr_poset_size, big(48));
        assert_eq!(r.per_dim, vec![(2, big(6)), (3, big(6))]);
        assert_eq!(r.per_type_raw, vec![(1, big(18)), (2, big(6))]);
    }

    #[test]
    fn report_n5_example() {
        assert_eq!(closed_form_counts(5).r_n, big(720));
    }

    #[test]
    fn vcr_sizes_small() {
        assert_eq!(vcr_poset_size(2), big(11));
        assert_eq!(vcr_poset_size(3), big(48));
        assert_eq!(vcr_poset_size(4), big(236));
        // consistency: 2^n + C(2^n,2) + r_n
        for n in 2..=10 {
            let direct = pow2(n.into()) + choose_two(&pow2(n.into())) + rect_total(n);
            assert_eq!(vcr_poset_size(n), direct);
        }
    }

    #[test]
    fn enumeration_routes_agree_up_to_20() {
        for n in 2..=20 {
            let r = rect_total(n);
            assert_eq!(star_identity_sum(n), r, "identity (*) at n = {n}");
            assert_eq!(type_sum(n), r, "type route at n = {n}");
            assert_eq!(dim_sum(n), r, "dimension route at n = {n}");
        }
    }

    #[test]
    fn chord_recounts_agree_up_to_20() {
        for n in 2..=20 {
            let r = rect_total(n);
            assert_eq!(chord_recount_full(n), r, "1/6 route at n = {n}");
            assert_eq!(chord_recount_d(n), r, "1/2 route at n = {n}");
            assert_eq!(chord_recount_s(n), r, "1/4 route at n = {n}");
        }
    }

    #[test]
    fn chord_census() {
        // chord lengths partition all C(2^n, 2) vertex pairs
        for n in 2..=12 {
            let mut total = BigUint::zero();
            for i in 1..=n {
                total += chord_count(n, i);
            }
            assert_eq!(total, choose_two(&pow2(n.into())));
        }
    }

    #[test]
    fn big_n_stays_exact() {
        // spot value: the formulas stay integral and consistent at n = 200
        let n = 200;
        assert_eq!(star_identity_sum(n), rect_total(n));
        assert_eq!(type_sum(n), rect_total(n));
        assert_eq!(chord_recount_full(n), rect_total(n));
    }

    #[test]
    fn json_uses_decimal_strings() {
        let r = closed_form_counts(5);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["r_n"], serde_json::json!("720"));
        assert_eq!(json["r_n_vertex"], serde_json::json!("90"));
        assert_eq!(json["per_type_raw"][0]["i"], serde_json::json!(1));
    }
}
