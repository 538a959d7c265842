use std::sync::LazyLock;

use rayon::prelude::*;

use crate::flags::memo::Memo;
use crate::flags::Partition;
use crate::paths::{admissible_set, PathQuery};
use crate::qseries::{QPolynomial, XSeries};
use crate::{Error, Result};

type Key = (usize, i64, i64, usize);

struct Engine {
    weyl: Memo<(i64, i64, usize), QPolynomial>,
    hook: Memo<Key, QPolynomial>,
    demazure: Memo<Key, QPolynomial>,
    ses: Memo<Key, QPolynomial>,
    fusion: Memo<(Partition, i64, usize), QPolynomial>,
}

static ENGINE: LazyLock<Engine> = LazyLock::new(|| Engine {
    weyl: Memo::new(),
    hook: Memo::new(),
    demazure: Memo::new(),
    ses: Memo::new(),
    fusion: Memo::new(),
});

/// Number of cached polynomials across all operations.
pub fn cache_size() -> usize {
    let e = &*ENGINE;
    e.weyl.len() + e.hook.len() + e.demazure.len() + e.ses.len() + e.fusion.len()
}

fn check_levels(m_prime: usize, m: usize) -> Result<()> {
    if m_prime == 0 || m < m_prime {
        return Err(Error::NoFlag { m, m_prime });
    }
    Ok(())
}

fn delta(a: i64, b: i64) -> QPolynomial {
    if a == b {
        QPolynomial::one()
    } else {
        QPolynomial::zero()
    }
}

/// `(s - n) / 2` when it is a non-negative integer.
fn half_gap(s: i64, n: i64) -> Option<i64> {
    (n >= 0 && s >= n && (s - n) % 2 == 0).then_some((s - n) / 2)
}

fn from_histogram(hist: Vec<u64>) -> QPolynomial {
    QPolynomial::from_coeffs(hist)
}

/// Level-`m` flag of the local Weyl module `W(s)`: the sum of `q^comaj` over
/// admissible paths of length `s` ending at `n`.
///
/// # Panics
///
/// Panics when `m == 0`.
pub fn weyl(s: i64, n: i64, m: usize) -> QPolynomial {
    assert!(m >= 1, "level must be positive");
    if half_gap(s, n).is_none() {
        return QPolynomial::zero();
    }
    ENGINE.weyl.get_or_insert_with((s, n, m), || {
        let set = admissible_set(m, n as usize);
        from_histogram(
            PathQuery::new(s as usize, n as usize)
                .admissible(&set)
                .comaj_histogram(),
        )
    })
}

/// Level-`m` flag of the hook fusion product `V(m', 1^s)`: paths of length
/// `s + m'` that start with `m'` up-steps.
pub fn hook(m_prime: usize, s: i64, n: i64, m: usize) -> Result<QPolynomial> {
    check_levels(m_prime, m)?;
    let total = s + m_prime as i64;
    if s < 0 || half_gap(total, n).is_none() {
        return Ok(QPolynomial::zero());
    }
    Ok(ENGINE.hook.get_or_insert_with((m_prime, s, n, m), || {
        let set = admissible_set(m, n as usize);
        let q = PathQuery::new(total as usize, n as usize)
            .admissible(&set)
            .prefix_ups(m_prime);
        from_histogram(q.comaj_histogram())
    }))
}

/// Level-`m` flag of the Demazure module `D(m', s)`, by back-substitution in
/// the unitriangular system relating Weyl flags at levels `m'` and `m`.
pub fn demazure(m_prime: usize, s: i64, n: i64, m: usize) -> Result<QPolynomial> {
    check_levels(m_prime, m)?;
    let Some(k) = half_gap(s, n) else {
        return Ok(QPolynomial::zero());
    };
    if m_prime == m {
        return Ok(delta(s, n));
    }
    Ok(ENGINE.demazure.get_or_insert_with((m_prime, s, n, m), || {
        // v_j = V^{m'->m}_{s-2j, n}; row j reads b_j = sum_{l >= j} U_{jl} v_l.
        let mut v: Vec<QPolynomial> = vec![QPolynomial::zero(); k as usize + 1];
        for j in (0..=k).rev() {
            let mut acc = weyl(s - 2 * j, n, m);
            for l in (j + 1)..=k {
                let u = weyl(s - 2 * j, s - 2 * l, m_prime);
                if !u.is_zero() {
                    acc -= &(&u * &v[l as usize]);
                }
            }
            v[j as usize] = acc;
        }
        v.swap_remove(0)
    }))
}

/// Same value as [`demazure`], from the explicit alternating sum over chains
/// `0 = p_0 < p_1 < ... < p_{r+1} = j` of products of level-`m'` Weyl flags.
/// Exponential in `(s - n) / 2`.
pub fn demazure_inclusion_exclusion(
    m_prime: usize,
    s: i64,
    n: i64,
    m: usize,
) -> Result<QPolynomial> {
    check_levels(m_prime, m)?;
    let Some(k) = half_gap(s, n) else {
        return Ok(QPolynomial::zero());
    };
    let u = |i: i64, j: i64| weyl(s - 2 * i, s - 2 * j, m_prime);
    let mut total = weyl(s, n, m);
    for j in 1..=k {
        let inner = (j - 1) as u32;
        let mut f = QPolynomial::zero();
        for mask in 0u64..(1u64 << inner) {
            let mut chain = vec![0i64];
            chain.extend((1..j).filter(|p| mask >> (p - 1) & 1 == 1));
            chain.push(j);
            let mut prod = QPolynomial::one();
            for w in chain.windows(2) {
                prod = &prod * &u(w[0], w[1]);
                if prod.is_zero() {
                    break;
                }
            }
            if (chain.len() - 1) % 2 == 1 {
                f -= &prod;
            } else {
                f += &prod;
            }
        }
        total += &(&f * &weyl(s - 2 * j, n, m));
    }
    Ok(total)
}

/// Level-`m` flag of the fusion product `V(xi)`: a chain sum of Demazure
/// flags over `0 = p_0 <= p_1 <= ... <= p_{l-1} = k`, weighted by
/// `q^{p_1 + ... + p_{l-2}}`, with `xi_0 = m` prepended.
pub fn fusion(xi: &Partition, n: i64, m: usize) -> Result<QPolynomial> {
    if m == 0 || m < xi.largest() {
        return Err(Error::NoFlag {
            m,
            m_prime: xi.largest(),
        });
    }
    let size = xi.size() as i64;
    let Some(k) = half_gap(size, n) else {
        return Ok(QPolynomial::zero());
    };
    let l = xi.len();
    if l <= 1 {
        return Ok(delta(n, size));
    }
    Ok(ENGINE.fusion.get_or_insert_with((xi.clone(), n, m), || {
        let mut levels = vec![m];
        levels.extend_from_slice(xi.parts());
        let k = k as usize;
        // dp[p] sums over chains ending with p_j = p
        let mut dp = vec![QPolynomial::zero(); k + 1];
        dp[0] = QPolynomial::one();
        for j in 1..l {
            let i = l - j;
            let tail = xi.tail_sum(i) as i64;
            let mut next = vec![QPolynomial::zero(); k + 1];
            for (prev, acc) in dp.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (p, slot) in next.iter_mut().enumerate().skip(prev) {
                    if j == l - 1 && p != k {
                        continue;
                    }
                    let factor = demazure(
                        levels[i],
                        tail - 2 * prev as i64,
                        tail - 2 * p as i64,
                        levels[i - 1],
                    )
                    .expect("parts decrease, so every factor has a flag");
                    if factor.is_zero() {
                        continue;
                    }
                    let mut term = acc * &factor;
                    if j < l - 1 {
                        term = term.shift(p as i64);
                    }
                    *slot += &term;
                }
            }
            dp = next;
        }
        dp.swap_remove(k)
    }))
}

/// Hook flags from the short exact sequence recursion alone, with no path
/// enumeration.
pub fn ses_recursion(m_prime: usize, s: i64, n: i64, m: usize) -> Result<QPolynomial> {
    check_levels(m_prime, m)?;
    if s < 0 {
        return Ok(QPolynomial::zero());
    }
    Ok(ses_inner(m_prime, s, n, m))
}

fn ses_inner(m_prime: usize, s: i64, n: i64, m: usize) -> QPolynomial {
    if s == 0 {
        return delta(m_prime as i64, n);
    }
    if n < 0 {
        return QPolynomial::zero();
    }
    ENGINE.ses.get_or_insert_with((m_prime, s, n, m), || {
        let mp = m_prime as i64;
        if m == m_prime {
            let gap = s + m as i64 - n;
            if gap < 0 || gap % 2 != 0 {
                return QPolynomial::zero();
            }
            return ses_inner(1, s - 1, n - m as i64, m).shift(gap / 2);
        }
        let mut total = if mp == s + n {
            QPolynomial::q_pow(s)
        } else {
            QPolynomial::zero()
        };
        for r in (mp + 2 - s).max(1)..=mp + 1 {
            let term = ses_inner(r as usize, s - 2 - mp + r, n, m);
            total += &if r == mp + 1 { term } else { term.shift(s) };
        }
        total
    })
}

/// `A^{m'->m}_n(x, q)` through `x^order`: the `x^k` coefficient is the
/// Demazure flag of weight `n + 2k`.
pub fn generating_series(m_prime: usize, m: usize, n: usize, order: usize) -> Result<XSeries> {
    check_levels(m_prime, m)?;
    let coeffs = (0..=order)
        .into_par_iter()
        .map(|k| demazure(m_prime, (n + 2 * k) as i64, n as i64, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(XSeries::from_coeffs(order, coeffs))
}

/// Two sides of a polynomial identity, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Flags compose: `V^{xi->m}_n = sum_p V^{xi->m'}_p V^{xi(m',p)->m}_n` for
/// `m >= m' >= xi_1`.
pub fn flag_transitivity_check(
    xi: &Partition,
    m_prime: usize,
    m: usize,
    n: i64,
) -> Result<IdentityCheck> {
    check_levels(m_prime.max(1), m)?;
    if m_prime < xi.largest() {
        return Err(Error::NoFlag {
            m: m_prime,
            m_prime: xi.largest(),
        });
    }
    let lhs = fusion(xi, n, m)?;
    let size = xi.size();
    let mut rhs = QPolynomial::zero();
    for p in (size % 2..=size).step_by(2) {
        let first = fusion(xi, p as i64, m_prime)?;
        if first.is_zero() {
            continue;
        }
        rhs += &(&first * &fusion(&Partition::demazure(m_prime, p), n, m)?);
    }
    Ok(IdentityCheck { lhs, rhs })
}

/// One cell of a flag table.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TableCell {
    pub s: usize,
    pub n: usize,
    pub poly: QPolynomial,
}

/// `V^{m'->m}_{s,n}` for all `n <= s <= max_s` with `s - n` even, ordered by
/// `(s, n)`. Cells are evaluated in parallel.
pub fn demazure_table(m_prime: usize, m: usize, max_s: usize) -> Result<Vec<TableCell>> {
    check_levels(m_prime, m)?;
    let cells: Vec<(usize, usize)> = (0..=max_s)
        .flat_map(|s| (s % 2..=s).step_by(2).map(move |n| (s, n)))
        .collect();
    cells
        .into_par_iter()
        .map(|(s, n)| {
            Ok(TableCell {
                s,
                n,
                poly: demazure(m_prime, s as i64, n as i64, m)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> QPolynomial {
        QPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn worked_example() {
        assert_eq!(weyl(5, 3, 2), poly(&[(3, 1), (4, 1)]));
        assert_eq!(ses_recursion(1, 4, 3, 2).unwrap(), poly(&[(3, 1), (4, 1)]));
    }

    #[test]
    fn boundary_values() {
        for m in 1..6 {
            for n in 0..6 {
                assert!(weyl(n, n, m).is_one());
                assert!(weyl(n + 1, n, m).is_zero());
                assert!(weyl(n, n + 2, m).is_zero());
                assert!(weyl(-1, n, m).is_zero());
            }
        }
        assert_eq!(weyl(4, 0, 4), poly(&[(2, 1), (4, 1)]));
        assert!(weyl(4, 0, 1).is_zero());
    }

    #[test]
    fn level_checks() {
        assert_eq!(hook(3, 2, 1, 2), Err(Error::NoFlag { m: 2, m_prime: 3 }));
        assert!(demazure(4, 4, 0, 3).is_err());
        assert!(fusion(&Partition::hook(3, 1), 2, 2).is_err());
        assert!(ses_recursion(2, 2, 0, 1).is_err());
    }

    #[test]
    fn hook_base_cases() {
        for mp in 1..4 {
            for m in mp..5 {
                for n in 0..6 {
                    assert_eq!(hook(mp, 0, n, m).unwrap(), delta(mp as i64, n));
                }
            }
        }
        for s in 1..8 {
            for n in 0..=s {
                assert_eq!(hook(1, s - 1, n, 3).unwrap(), weyl(s, n, 3));
            }
        }
    }

    #[test]
    fn demazure_two_code_paths() {
        let solve = demazure(2, 6, 0, 3).unwrap();
        assert_eq!(solve, demazure_inclusion_exclusion(2, 6, 0, 3).unwrap());
        for s in 0..8 {
            for n in 0..=s {
                assert_eq!(demazure(1, s, n, 4).unwrap(), weyl(s, n, 4));
                assert_eq!(demazure(3, s, n, 3).unwrap(), delta(s, n));
            }
        }
    }

    #[test]
    fn fusion_special_shapes() {
        for s in 0..8usize {
            for n in 0..=s as i64 {
                assert_eq!(
                    fusion(&Partition::ones(s), n, 3).unwrap(),
                    weyl(s as i64, n, 3)
                );
                assert_eq!(
                    fusion(&Partition::demazure(3, s), n, 3).unwrap(),
                    delta(s as i64, n)
                );
            }
        }
        assert!(fusion(&Partition::default(), 0, 2).unwrap().is_one());
        assert!(fusion(&Partition::default(), 2, 2).unwrap().is_zero());
    }

    #[test]
    fn series_and_table() {
        let a = generating_series(1, 2, 3, 3).unwrap();
        assert!(a.coeff(0).is_one());
        assert_eq!(a.coeff(1), &poly(&[(3, 1), (4, 1)]));
        let flat = generating_series(3, 3, 1, 4).unwrap();
        assert!(flat.coeff(0).is_one() && (1..=4).all(|k| flat.coeff(k).is_zero()));
        let t = demazure_table(1, 2, 4).unwrap();
        assert_eq!(t.len(), 9);
        assert_eq!((t[0].s, t[0].n), (0, 0));
        assert!(t.windows(2).all(|w| (w[0].s, w[0].n) < (w[1].s, w[1].n)));
    }

    #[test]
    fn transitivity_examples() {
        for n in 0..=6 {
            assert!(flag_transitivity_check(&Partition::ones(6), 2, 3, n)
                .unwrap()
                .holds());
        }
        let xi: Partition = "2,1,1".parse().unwrap();
        for n in 0..=4 {
            assert!(flag_transitivity_check(&xi, 2, 4, n).unwrap().holds());
            assert!(flag_transitivity_check(&xi, 4, 4, n).unwrap().holds());
        }
    }
}
