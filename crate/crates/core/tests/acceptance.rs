//! Acceptance criteria 1–9. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line; the process fails if any
//! criterion does.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use superchar::oracle::{freudenthal_table, schur_expand, verify_theorem1, Series, Weight};
use superchar::specialize::qdim_so_odd_degree;
use superchar::{
    char_osp1, char_osp_even_fork_conj, char_so_even_fork, char_so_odd, check_fork_sum, enumerate, gl_superdim,
    qdim_so_odd, super_schur_eval, t_dimension, verify_superdim_identity, EnumConstraints, IdentityParams,
    Partition, Ranks, RationalPoint, SuperdimIdentity, TruncatedSeries, VerificationReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn ints(s: &TruncatedSeries) -> Vec<i64> {
    s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn ensure_report(rep: VerificationReport) -> Result<(), String> {
    ensure(rep.passed(), || rep.to_string())
}

fn criterion_1() -> Outcome {
    let printed: [(u32, &[i64]); 3] = [
        (1, &[1, 3, 3, 1]),
        (2, &[1, 3, 9, 9, 9, 3, 1]),
        (3, &[1, 3, 9, 19, 24, 24, 19, 9, 3, 1]),
    ];
    for (pp, want) in printed {
        let got = ints(&t_dimension(&char_so_odd(3, pp).unwrap(), 3 * pp).unwrap());
        ensure(got == want, || format!("so(7) p={pp}: {got:?} != {want:?}"))?;
    }
    Ok("so(7) dim_t for p = 1, 2, 3".into())
}

fn criterion_2() -> Outcome {
    let d = 12;
    let closed = [
        TruncatedSeries::from_product('t', &[], &[1, 1, 1], d).unwrap(),
        TruncatedSeries::from_product('t', &[3], &[1, 1, 1, 2, 2, 2], d).unwrap(),
        TruncatedSeries::from_product('t', &[], &[1, 1, 1, 2, 2, 2], d).unwrap(),
    ];
    let printed: [[i64; 5]; 3] = [[1, 3, 6, 10, 15], [1, 3, 9, 18, 36], [1, 3, 9, 19, 39]];
    for (i, pp) in (1..=3u32).enumerate() {
        let got = t_dimension(&char_osp1(3, pp, d).unwrap(), d).unwrap();
        ensure(got == closed[i], || format!("osp(1|6) p={pp}: {got} != {}", closed[i]))?;
        let head = &ints(&got)[..5];
        ensure(head == printed[i], || format!("osp(1|6) p={pp}: head {head:?}"))?;
    }
    Ok("osp(1|6) dim_t against closed forms through t^12".into())
}

fn criterion_3() -> Outcome {
    let printed: [(u32, u32, Vec<&[u32]>); 9] = [
        (0, 1, vec![&[], &[1, 1], &[1, 1, 1, 1]]),
        (1, 1, vec![&[1], &[1, 1, 1]]),
        (0, 2, vec![&[], &[1, 1], &[2, 2], &[1, 1, 1, 1], &[2, 2, 1, 1], &[2, 2, 2, 2]]),
        (1, 2, vec![&[1], &[2, 1], &[1, 1, 1], &[2, 2, 1], &[2, 1, 1, 1], &[2, 2, 2, 1]]),
        (2, 2, vec![&[2], &[2, 1, 1], &[2, 2, 2]]),
        (
            0,
            3,
            vec![
                &[], &[1, 1], &[2, 2], &[1, 1, 1, 1], &[3, 3], &[2, 2, 1, 1], &[3, 3, 1, 1], &[2, 2, 2, 2],
                &[3, 3, 2, 2], &[3, 3, 3, 3],
            ],
        ),
        (
            1,
            3,
            vec![
                &[1], &[2, 1], &[1, 1, 1], &[2, 1, 1, 1], &[2, 2, 1], &[3, 2], &[2, 2, 2, 1], &[3, 2, 1, 1],
                &[3, 3, 1], &[3, 2, 2, 2], &[3, 3, 2, 1], &[3, 3, 3, 2],
            ],
        ),
        (
            2,
            3,
            vec![
                &[2], &[2, 1, 1], &[3, 1], &[2, 2, 2], &[3, 1, 1, 1], &[3, 2, 1], &[3, 2, 2, 1], &[3, 3, 2],
                &[3, 3, 3, 1],
            ],
        ),
        (3, 3, vec![&[3], &[3, 1, 1], &[3, 2, 2], &[3, 3, 3]]),
    ];
    for (r, pp, labels) in printed {
        let e = char_so_even_fork(4, r, pp).unwrap();
        let got: BTreeSet<Partition> = e.labels().cloned().collect();
        let want: BTreeSet<Partition> = labels.iter().map(|l| p(l)).collect();
        let tag = format!("[0,0,{r},{}]", pp - r);
        ensure(e.terms.len() == labels.len(), || format!("{tag}: {} terms", e.terms.len()))?;
        ensure(got == want, || format!("{tag}: labels differ"))?;
        ensure(e.terms.iter().all(|(_, c)| *c == BigInt::from(1)), || format!("{tag}: coefficient != 1"))?;
        let want_exp = BigRational::new(BigInt::from(-(pp as i64)), BigInt::from(2));
        ensure(e.prefactor.x_exp == want_exp, || format!("{tag}: prefactor {}", e.prefactor.x_exp))?;
    }
    Ok("nine so(8) fork expansions label for label".into())
}

fn criterion_4() -> Outcome {
    let mut runs = 0;
    for k in 2..=4 {
        for pp in 0..=3 {
            for r in 0..=pp {
                ensure_report(verify_theorem1(k, r, pp).map_err(|e| e.to_string())?)?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} (k, r, p) points against the Freudenthal oracle"))
}

fn superdim(id: SuperdimIdentity, m: usize, n: usize, r: u32, pp: u32, d: u32) -> Result<(), String> {
    let rep = verify_superdim_identity(id, IdentityParams { m, n, r, p: pp }, d).map_err(|e| e.to_string())?;
    ensure_report(rep)
}

fn criterion_5() -> Outcome {
    let mut runs = 0;
    for n in 1..=3 {
        for pp in 0..=3 {
            superdim(SuperdimIdentity::BCase1, n, n, 0, pp, 10)?;
            runs += 1;
        }
    }
    for n in 0..=2 {
        for k in 1..=3 {
            for pp in 0..=3 {
                superdim(SuperdimIdentity::BCase2, n + k, n, 0, pp, 12)?;
                runs += 1;
            }
        }
    }
    for m in 0..=2 {
        for k in 1..=3 {
            for pp in 0..=3 {
                superdim(SuperdimIdentity::BCase3, m, m + k, 0, pp, 12)?;
                runs += 1;
            }
        }
    }
    for k in 2..=4 {
        let id = if k % 2 == 0 { SuperdimIdentity::DEven } else { SuperdimIdentity::DOdd };
        for n in 0..=2 {
            for pp in 0..=3 {
                superdim(id, n + k, n, 0, pp, 12)?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} superdimension series identities"))
}

fn criterion_6() -> Outcome {
    for k in 2..=4 {
        for pp in 0..=4 {
            let rep = check_fork_sum(Ranks::Single(k), pp, None).map_err(|e| e.to_string())?;
            ensure(rep.warnings.is_empty(), || rep.to_string())?;
            ensure_report(rep)?;
        }
    }
    for m in 0..=3 {
        for n in 0..=3 {
            if m + n == 0 {
                continue;
            }
            for pp in 0..=3 {
                ensure_report(check_fork_sum(Ranks::Super { m, n }, pp, Some(12)).map_err(|e| e.to_string())?)?;
            }
        }
    }
    let all = enumerate(EnumConstraints::new().weight_at_most(18)).unwrap();
    let mut checked = 0;
    for lam in all {
        for pp in lam.largest_part()..=6 {
            let hits: Vec<u32> = (0..=pp).filter(|&r| lam.in_class_br(r)).collect();
            ensure(hits.len() == 1, || format!("{lam} with p={pp} lies in B_r for r in {hits:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("fork sums and {checked} disjoint-union memberships"))
}

fn oracle_labels(k: usize, r: u32, pp: u32) -> Vec<(Partition, BigInt)> {
    let mut hw = vec![pp as i64; k];
    hw[k - 1] = pp as i64 - 2 * r as i64;
    let table = freudenthal_table(Series::D, k, &Weight(hw)).unwrap();
    schur_expand(&table, &BigRational::new(BigInt::from(pp), BigInt::from(2)), k).unwrap()
}

fn criterion_7() -> Outcome {
    for k in 2..=4 {
        for pp in 0..=3 {
            for r in 0..=pp {
                let conj = char_osp_even_fork_conj(k, 0, r, pp, k as u32 * pp).unwrap();
                ensure(conj.complete, || format!("k={k} r={r} p={pp}: n=0 expansion truncated"))?;
                ensure(conj.terms == oracle_labels(k, r, pp), || {
                    format!("k={k} r={r} p={pp}: n=0 degeneration differs from the oracle")
                })?;
            }
        }
    }
    for k in 2..=3 {
        for n in 0..=2 {
            for pp in 0..=3 {
                for r in 0..=pp {
                    superdim(SuperdimIdentity::DForkConj, n + k, n, r, pp, 12)?;
                }
            }
        }
    }
    Ok("conjectured osp fork character: n=0 degeneration and sdim_t".into())
}

fn criterion_8() -> Outcome {
    let sums = [8, 35, 112];
    for pp in 1..=3u32 {
        let deg = qdim_so_odd_degree(3, pp);
        ensure(deg == 6 * pp, || format!("p={pp}: degree {deg}"))?;
        let lhs = qdim_so_odd(3, pp, deg + 4).unwrap();
        let base = [5u32, 4, 3, 3, 2, 1];
        let top: Vec<u32> = base.iter().map(|a| a + pp).collect();
        let rhs = TruncatedSeries::from_product('q', &top, &base, deg + 4).unwrap();
        ensure(lhs == rhs, || format!("p={pp}: {lhs} != {rhs}"))?;
        ensure(lhs.degree() == Some(deg), || format!("p={pp}: not a polynomial of degree {deg}"))?;
        ensure(lhs.is_palindromic(), || format!("p={pp}: not palindromic"))?;
        let total = lhs.sum();
        ensure(total == BigInt::from(sums[pp as usize - 1]), || format!("p={pp}: sum {total}"))?;
    }
    Ok("so(7) dim_q equals the product formula; sums 8, 35, 112".into())
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for m in 0..=4usize {
        for n in 0..=4usize {
            let hook = EnumConstraints::new().hook(m, n as u32).weight_at_most(10);
            for lam in enumerate(hook).unwrap() {
                let lhs = gl_superdim(&lam, m, n);
                let rhs = super_schur_eval(&lam, &RationalPoint::uniform(1, m), &RationalPoint::uniform(-1, n));
                ensure(BigRational::from_integer(lhs.clone()) == rhs, || {
                    format!("{lam} in gl({m}|{n}): {lhs} != {rhs}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} hook partitions"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("so(7) t-dimensions", criterion_1),
        ("osp(1|6) t-dimensions", criterion_2),
        ("so(8) fork expansions", criterion_3),
        ("fork labels vs Freudenthal oracle", criterion_4),
        ("superdimension identities", criterion_5),
        ("fork-sum identities", criterion_6),
        ("conjecture consistency", criterion_7),
        ("so(7) q-dimension", criterion_8),
        ("cross-oracle superdimension", criterion_9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
