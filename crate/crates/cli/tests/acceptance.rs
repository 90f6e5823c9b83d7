//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Each criterion must hold exactly and finish within its time budget.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use sha2::{Digest, Sha256};
use touchard_core::{
    bell_mod_p_stream, bell_seeds, bell_shift, congruence_class_partition, lemma_residue,
    touchard_check, BellTable, BinomialTable, PartitionOracle, PrimePower, ShiftPolynomial,
    StirlingTriangle,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn residue(v: &BigUint, p: u64) -> u64 {
    (v % BigUint::from(p)).iter_u64_digits().next().unwrap_or(0)
}

fn quintic_exact() -> Outcome {
    let expect: Vec<BigUint> = [52u32, 75, 50, 20, 5, 1]
        .into_iter()
        .map(BigUint::from)
        .collect();
    let closed = ShiftPolynomial::closed_form(5, &BellTable::build(5), &BinomialTable::build(5))
        .map_err(|e| e.to_string())?;
    let recursive = ShiftPolynomial::recursive(5);
    ensure(closed.coeffs() == expect, || {
        format!("closed form gave {closed}")
    })?;
    ensure(recursive.coeffs() == expect, || {
        format!("recurrence gave {recursive}")
    })?;
    Ok(format!("P_5 = {closed} by both constructions"))
}

fn shifted_bell_sweep() -> Outcome {
    let bell = BellTable::build(45);
    let tri = StirlingTriangle::build(30);
    let binom = BinomialTable::build(15);
    let mut pairs = 0;
    for j in 0..=15 {
        let poly = ShiftPolynomial::closed_form(j, &bell, &binom).map_err(|e| e.to_string())?;
        for n in 1..=30 {
            let got = bell_shift(n, j, &tri, &poly).map_err(|e| e.to_string())?;
            ensure(&got == bell.get(n + j).unwrap(), || {
                format!("n = {n}, j = {j}: {got} != B_{}", n + j)
            })?;
            pairs += 1;
        }
    }
    ensure(pairs == 480, || format!("{pairs} pairs checked"))?;
    Ok(format!("{pairs} (n, j) pairs exact"))
}

fn oracle_equivalence() -> Outcome {
    let bell = BellTable::build(12);
    let tri = StirlingTriangle::build(12);
    let oracle = PartitionOracle::new(12);
    for n in 1..=12 {
        let counts = oracle.count_by_blocks(n).map_err(|e| e.to_string())?;
        let total: u64 = counts.iter().sum();
        ensure(BigUint::from(total) == *bell.get(n).unwrap(), || {
            format!("n = {n}: enumerated {total} partitions")
        })?;
        for (k, c) in counts.iter().enumerate().map(|(i, c)| (i + 1, c)) {
            ensure(BigUint::from(*c) == tri.get(n, k).unwrap(), || {
                format!("S({n},{k}): enumerated {c}")
            })?;
        }
    }
    Ok("enumeration matches B_n and S(n, k) for n <= 12".into())
}

fn prime_power_residue_exact() -> Outcome {
    let bell = BellTable::build(250);
    let powers = PrimePower::all_up_to(250);
    for pp in &powers {
        let actual = residue(bell.get(pp.index()).unwrap(), pp.p());
        ensure(actual == lemma_residue(*pp), || {
            format!("B_{} = {actual} mod {}", pp.value(), pp.p())
        })?;
    }
    Ok(format!("{} prime powers <= 250", powers.len()))
}

fn prime_power_residue_orbits() -> Outcome {
    let oracle = PartitionOracle::new(12);
    let bell = BellTable::build(11);
    let mut checked = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
        let pp = PrimePower::all_up_to(q)
            .into_iter()
            .find(|pp| pp.value() == q)
            .ok_or_else(|| format!("{q} is not a prime power"))?;
        let (p, m) = (pp.p(), pp.m());
        let orbits = oracle
            .orbit_decomposition(pp.index())
            .map_err(|e| e.to_string())?;
        let b = bell.get(pp.index()).unwrap();

        let total: usize = orbits.iter().map(|o| o.size).sum();
        ensure(BigUint::from(total) == *b, || {
            format!("{pp}: orbit sizes sum to {total}")
        })?;
        for o in &orbits {
            let mut s = o.size as u64;
            while s.is_multiple_of(p) {
                s /= p;
            }
            ensure(s == 1, || format!("{pp}: orbit of size {}", o.size))?;
        }

        let fixed: BTreeSet<_> = orbits
            .iter()
            .filter(|o| o.is_fixed())
            .map(|o| o.representative.clone())
            .collect();
        ensure(fixed.len() == m as usize + 1, || {
            format!("{pp}: {} fixed partitions", fixed.len())
        })?;
        ensure(fixed.len() as u64 % p == residue(b, p), || {
            format!("{pp}: fixed count not congruent to B_{q}")
        })?;
        let classes: BTreeSet<_> = (0..=m)
            .map(|j| congruence_class_partition(pp, j))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        ensure(fixed == classes, || {
            format!("{pp}: fixed set is not the congruence classes")
        })?;
        checked.push(q.to_string());
    }
    Ok(format!("q in {{{}}}", checked.join(", ")))
}

fn touchard_sweep() -> Outcome {
    let bell = BellTable::build(269);
    let mut total = 0;
    for p in [2u64, 3, 5, 7, 11, 13] {
        for m in [1u32, 2] {
            let pp = PrimePower::new(p, m).map_err(|e| e.to_string())?;
            let report = touchard_check(pp, 1, 100, &bell).map_err(|e| e.to_string())?;
            ensure(report.checked == 100, || {
                format!("{pp}: checked {}", report.checked)
            })?;
            ensure(report.holds(), || {
                format!("{pp}: counterexamples {:?}", report.counterexamples)
            })?;
            total += report.checked;
        }
    }
    Ok(format!("{total} comparisons, no counterexamples"))
}

fn modular_stream() -> Outcome {
    let bell = BellTable::build(2000);
    for p in [2u64, 3, 5, 7, 11, 13] {
        let seeds = bell_seeds(p, &bell).map_err(|e| e.to_string())?;
        let stream = bell_mod_p_stream(p, 2000, &seeds).map_err(|e| e.to_string())?;
        let exact = bell.residues(p);
        if let Some(n) = (0..=2000).find(|&n| stream[n] != exact[n]) {
            return Err(format!("p = {p}, n = {n}: {} != {}", stream[n], exact[n]));
        }
    }
    Ok("6 primes agree at every n <= 2000".into())
}

fn cli_determinism() -> Outcome {
    let commands: [&[&str]; 6] = [
        &["bell", "120", "--cross-check"],
        &["stirling", "25"],
        &["shift-poly", "30", "--check"],
        &["verify", "3", "2", "1", "150"],
        &["orbits", "3", "2"],
        &["bell-mod", "11", "1500"],
    ];
    let digest = |args: &[&str]| -> Result<String, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_touchard"))
            .args(args)
            .env_remove("TOUCHARD_DEPTH")
            .env_remove("TOUCHARD_CAP")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("{args:?} exited {:?}", out.status.code())
        })?;
        let hash = Sha256::digest(&out.stdout);
        Ok(hash.iter().map(|b| format!("{b:02x}")).collect())
    };
    let mut runs = 0;
    for args in commands {
        for format in ["tsv", "json-lines"] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            let (a, b) = (digest(&full)?, digest(&full)?);
            ensure(a == b, || format!("{full:?}: {a} vs {b}"))?;
            runs += 1;
        }
    }
    Ok(format!(
        "{runs} command/format pairs hash identically across two runs"
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    check: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "P_5 exactness",
            budget: Duration::from_secs(1),
            check: quintic_exact,
        },
        Criterion {
            id: 2,
            name: "shifted Bell identity sweep",
            budget: Duration::from_secs(10),
            check: shifted_bell_sweep,
        },
        Criterion {
            id: 3,
            name: "oracle equivalence n <= 12",
            budget: Duration::from_secs(300),
            check: oracle_equivalence,
        },
        Criterion {
            id: 4,
            name: "B_{p^m} = m+1 mod p, closed form",
            budget: Duration::from_secs(30),
            check: prime_power_residue_exact,
        },
        Criterion {
            id: 5,
            name: "B_{p^m} = m+1 mod p, group action",
            budget: Duration::from_secs(120),
            check: prime_power_residue_orbits,
        },
        Criterion {
            id: 6,
            name: "Touchard sweep",
            budget: Duration::from_secs(60),
            check: touchard_sweep,
        },
        Criterion {
            id: 7,
            name: "modular stream to 2000",
            budget: Duration::from_secs(60),
            check: modular_stream,
        },
        Criterion {
            id: 8,
            name: "CLI determinism",
            budget: Duration::from_secs(300),
            check: cli_determinism,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= c.budget {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:.2?}, budget {:?}", c.budget))
            }
        });
        match result {
            Ok(detail) => println!("PASS  AC{} {}: {detail} [{elapsed:.2?}]", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL  AC{} {}: {why} [{elapsed:.2?}]", c.id, c.name);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
