//! Acceptance checks. Runs without the libtest harness so that every
//! criterion prints its own PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{Oracle, SAMPLE};
use qlogic::alphabet::covered_addresses;
use qlogic::hwemu::{assemble_images_with, EmuConfig, MemoryImages};
use qlogic::random::{random_circuit, random_qvector, CircuitShape};
use qlogic::sim::simulate_pattern_counted;
use qlogic::{
    assemble_images, encode_coverage, evaluate_superposed, matrix_from_circuit, parse_netlist,
    parse_truth_table, run_emulator, simulate_batch, superpose, Coverage, Error, PatternSet,
    QVector, ReadCounter, Symbol2,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn function_numbering() -> Check {
    // reference table of all two-input functions, columns f = 0..15
    let rows = [
        "0000000011111111",
        "0000111100001111",
        "0011001100110011",
        "0101010101010101",
    ];
    for f in 0..16u64 {
        let q = QVector::from_id_u64(2, f).map_err(fail)?;
        for (addr, row) in rows.iter().enumerate() {
            let want = row.as_bytes()[f as usize] == b'1';
            ensure(q.bit(addr) == want, format!("f={f} address {addr}"))?;
        }
        ensure(q.decimal_id() == f.into(), format!("id of f={f}"))?;
    }
    for (f, bits) in [
        (0, "0000"),
        (1, "0001"),
        (6, "0110"),
        (7, "0111"),
        (14, "1110"),
        (15, "1111"),
    ] {
        ensure(
            QVector::from_id_u64(2, f).map_err(fail)?.to_string() == bits,
            format!("f={f} should be {bits}"),
        )?;
    }
    Ok("16 functions, constants, AND, XOR, OR, NAND".into())
}

fn alphabet_table() -> Check {
    let table = [
        ("Q", "1000"),
        ("E", "0100"),
        ("H", "0010"),
        ("J", "0001"),
        ("O", "1010"),
        ("I", "0101"),
        ("A", "1100"),
        ("B", "0011"),
        ("S", "1001"),
        ("P", "0110"),
        ("C", "0111"),
        ("F", "1011"),
        ("L", "1101"),
        ("V", "1110"),
        ("Y", "1111"),
        ("∅", "0000"),
    ];
    let mut seen = BTreeSet::new();
    for (name, code) in table {
        let s: Symbol2 = name.parse()?;
        ensure(
            s.code_string() == code,
            format!("{name} is {} not {code}", s.code_string()),
        )?;
        ensure(s.name() == name, format!("{code} named {}", s.name()))?;
        seen.insert(code);
    }
    ensure(seen.len() == 16, "codes not distinct")?;
    let set = |s: Symbol2| -> BTreeSet<usize> {
        s.code_string()
            .chars()
            .enumerate()
            .filter(|&(_, c)| c == '1')
            .map(|(i, _)| i)
            .collect()
    };
    let mut pairs = 0;
    for a in Symbol2::all() {
        for b in Symbol2::all() {
            let u: BTreeSet<usize> = set(a).union(&set(b)).copied().collect();
            let i: BTreeSet<usize> = set(a).intersection(&set(b)).copied().collect();
            ensure(set(a.union(b)) == u, format!("{} ∪ {}", a.name(), b.name()))?;
            ensure(
                set(a.intersect(b)) == i,
                format!("{} ∩ {}", a.name(), b.name()),
            )?;
            pairs += 1;
        }
    }
    Ok(format!("16 codes, {pairs} unions and intersections"))
}

fn nand_minimization() -> Check {
    let rows = parse_truth_table("00 1\n01 1\n10 1\n11 0\n").map_err(fail)?;
    let cov = encode_coverage(&rows).map_err(fail)?;
    ensure(
        cov.to_string() == "Q -> 1\nE -> 1\nH -> 1\nJ -> 0\n",
        format!("encoded as {:?}", cov.to_string()),
    )?;
    let min = cov.minimize().map_err(fail)?;
    let lines: BTreeSet<String> = min.cubes().iter().map(|c| c.to_string()).collect();
    let want: BTreeSet<String> = ["V -> 1", "J -> 0"].iter().map(|s| s.to_string()).collect();
    ensure(lines == want, format!("minimized to {lines:?}"))?;
    let q = min.to_qvector().map_err(fail)?;
    ensure(q.to_string() == "1110", format!("vector {q}"))?;
    Ok("{V -> 1, J -> 0} -> 1110".into())
}

fn superposition_soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let shape = CircuitShape {
        max_inputs: 8,
        max_primitives: 20,
        ..CircuitShape::default()
    };
    let mut addresses = 0usize;
    for n in 0..100 {
        let c = random_circuit(&mut rng, &shape);
        let table = simulate_batch(&c, &PatternSet::exhaustive(&c)).map_err(fail)?;
        for (k, &o) in c.outputs().iter().enumerate() {
            let q = superpose(&c, c.line_name(o)).map_err(fail)?;
            for (a, row) in table.rows.iter().enumerate() {
                ensure(
                    q.bit(a) == row.values[k],
                    format!("circuit {n}, line {}, address {a}", c.line_name(o)),
                )?;
                addresses += 1;
            }
        }
    }
    Ok(format!("100 circuits, {addresses} addresses"))
}

fn triple_equivalence() -> Check {
    let c = parse_netlist(SAMPLE).map_err(fail)?;
    let p = PatternSet::exhaustive(&c);
    let sim = simulate_batch(&c, &p).map_err(fail)?;
    let auto = matrix_from_circuit(&c, 1).run_automaton(&p).map_err(fail)?;
    let (emu, _) = run_emulator(&assemble_images(&c).map_err(fail)?, &p).map_err(fail)?;
    ensure(sim.rows.len() == 64, "expected 64 rows")?;
    ensure(auto == sim, "automaton differs from simulator")?;
    ensure(emu == sim, "emulator differs from simulator")?;
    ensure(
        Oracle::from_text(SAMPLE).agrees_with(&sim),
        "simulator differs from oracle",
    )?;
    Ok("64 rows, simulator = automaton = emulator = oracle".into())
}

fn repair() -> Check {
    let c = parse_netlist(SAMPLE).map_err(fail)?;
    let p = PatternSet::exhaustive(&c);
    let reference = simulate_batch(&c, &p).map_err(fail)?;
    let fresh = matrix_from_circuit(&c, 1);
    let mut singles = 0;
    for col in 1..=fresh.cols() {
        for row in 1..=fresh.rows() {
            if fresh
                .cell(row, col)
                .and_then(|x| x.quantum.as_ref())
                .is_none()
                || row > fresh.rows() - fresh.spares()
            {
                continue;
            }
            let mut m = fresh.clone();
            m.inject_fault(row, col).map_err(fail)?;
            m.repair().map_err(fail)?;
            m.check_invariants().map_err(fail)?;
            ensure(
                m.run_automaton(&p).map_err(fail)? == reference,
                format!("fault at ({row},{col})"),
            )?;
            singles += 1;
        }
    }
    ensure(
        singles == 6,
        format!("{singles} single-fault sites, expected 6"),
    )?;
    let mut m = fresh.clone();
    for (row, col) in [(1, 1), (2, 2), (1, 3)] {
        m.inject_fault(row, col).map_err(fail)?;
    }
    let report = m.repair().map_err(fail)?;
    ensure(report.moves.len() == 3, "three moves expected")?;
    ensure(
        m.run_automaton(&p).map_err(fail)? == reference,
        "triple fault not restored",
    )?;
    let mut m = fresh.clone();
    m.inject_fault(1, 2).map_err(fail)?;
    m.inject_fault(2, 2).map_err(fail)?;
    ensure(
        matches!(m.repair(), Err(Error::RepairExhausted { column: 2, .. })),
        "two faults in one column should exhaust its spare",
    )?;
    Ok("6 single faults, 3 faults across columns, column exhaustion".into())
}

fn read_counts() -> Check {
    let c = parse_netlist(SAMPLE).map_err(fail)?;
    let q = superpose(&c, "B").map_err(fail)?;
    for row in &PatternSet::exhaustive(&c).rows {
        let mut counter = ReadCounter::default();
        simulate_pattern_counted(&c, row, &mut counter).map_err(fail)?;
        ensure(
            counter.q_reads == 6,
            format!("{} reads in simulation", counter.q_reads),
        )?;
        let mut counter = ReadCounter::default();
        evaluate_superposed(&q, row, &mut counter).map_err(fail)?;
        ensure(
            counter.q_reads == 1,
            format!("{} reads in superposed form", counter.q_reads),
        )?;
    }
    Ok("6 reads per pattern simulated, 1 superposed".into())
}

fn cycle_formula() -> Check {
    let c = parse_netlist(SAMPLE).map_err(fail)?;
    let (_, cycles) = run_emulator(
        &assemble_images(&c).map_err(fail)?,
        &PatternSet::exhaustive(&c),
    )
    .map_err(fail)?;
    ensure(cycles == 64 * (6 + 18), format!("{cycles} cycles"))?;
    Ok(format!("{cycles} cycles"))
}

fn round_trips() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 0..50 {
        let c = random_circuit(&mut rng, &CircuitShape::default());
        let text = c.to_string();
        let back = parse_netlist(&text).map_err(fail)?;
        ensure(back.to_string() == text, format!("netlist {n}"))?;
        ensure(
            back.to_netlist() == c.to_netlist(),
            format!("netlist {n} structure"),
        )?;
    }
    for n in 0..50 {
        let arity = 1 + n % 6;
        let q = random_qvector(&mut rng, arity);
        let cov = Coverage::from_qvector(&q).minimize().map_err(fail)?;
        let back = Coverage::parse(&cov.to_string()).map_err(fail)?;
        ensure(back == cov, format!("coverage {n}"))?;
        let covered: usize = cov
            .cubes()
            .iter()
            .filter(|c| c.out)
            .map(|c| covered_addresses(c).len())
            .sum();
        ensure(covered >= q.count_ones(), format!("coverage {n} lost ones"))?;
    }
    let shape = CircuitShape {
        max_inputs: 6,
        max_primitives: 10,
        max_arity: 2,
        two_input_only: true,
    };
    let dir = tempfile::tempdir().map_err(fail)?;
    for n in 0..50 {
        let c = random_circuit(&mut rng, &shape);
        let img = assemble_images_with(&c, EmuConfig::fitting(&c)).map_err(fail)?;
        let sub = dir.path().join(n.to_string());
        img.dump(&sub).map_err(fail)?;
        ensure(
            MemoryImages::load(&sub).map_err(fail)? == img,
            format!("image {n}"),
        )?;
    }
    Ok("50 netlists, 50 coverages, 50 image sets".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "function numbering",
            function_numbering,
            Some(Duration::from_secs(1)),
        ),
        (
            "alphabet table",
            alphabet_table,
            Some(Duration::from_secs(1)),
        ),
        ("NAND minimization", nand_minimization, None),
        (
            "superposition soundness",
            superposition_soundness,
            Some(Duration::from_secs(30)),
        ),
        (
            "triple equivalence",
            triple_equivalence,
            Some(Duration::from_secs(1)),
        ),
        ("repair", repair, None),
        ("single-access reads", read_counts, None),
        ("emulator cycles", cycle_formula, None),
        ("format round trips", round_trips, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if took > *l => Err(format!("took {took:?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("[{}] PASS {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[{}] FAIL {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
