//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Exact checks throughout; the only tolerances are the wall-clock limits
//! listed next to each criterion.

use std::time::{Duration, Instant};

use brandt_core::constructions::{
    b2, brandt, cyclic_group, phi_homomorphism, powerset_semigroup, restrict_brandt_to,
    symmetric_group_3, trivial_group, adjoin_zero,
};
use brandt_core::morphism::find_isomorphism;
use brandt_core::rewrite::{
    apply_rule_at, cell_decompose, derive_bounded, eliminate_single_occurrences, star_word,
    DeriveBounds, Direction, RewriteTrace, RuleTag, Substitution,
};
use brandt_core::structure::{classify, rho_quotient, rho_z, separate_regular_pair, Kind};
use brandt_core::words::{
    abelian1, abelian2, abelian_positive_basis, commut, exp_n, exp_n_red, group_satisfies_w_eq_1,
    identity_holds, is_repeated, ln_identity, trahtman_basis, Identity, Var, Word,
};
use brandt_core::{Element, FiniteSemigroup, GroupTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Brute-force oracle: recursive enumeration, right-to-left products.
fn holds_naive(s: &FiniteSemigroup, lhs: &[Var], rhs: &[Var]) -> bool {
    let mut vars: Vec<Var> = lhs.iter().chain(rhs).copied().collect();
    vars.sort();
    vars.dedup();
    fn value(s: &FiniteSemigroup, w: &[Var], vars: &[Var], vals: &[Element]) -> Element {
        let get = |v: &Var| vals[vars.iter().position(|u| u == v).unwrap()];
        let (last, init) = w.split_last().unwrap();
        init.iter().rev().fold(get(last), |acc, v| s.mul(get(v), acc))
    }
    fn go(s: &FiniteSemigroup, lhs: &[Var], rhs: &[Var], vars: &[Var], vals: &mut Vec<Element>) -> bool {
        if vals.len() == vars.len() {
            return value(s, lhs, vars, vals) == value(s, rhs, vars, vals);
        }
        for x in s.elements() {
            vals.push(x);
            let ok = go(s, lhs, rhs, vars, vals);
            vals.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    go(s, lhs, rhs, &vars, &mut Vec::new())
}

fn holds(s: &FiniteSemigroup, id: &Identity) -> bool {
    identity_holds(s, id, None).expect("within budget").holds
}

fn words(letters: &str, max_len: usize) -> Vec<Word> {
    let alphabet: Vec<Var> = letters.chars().map(Var::new).collect();
    let mut all = Vec::new();
    let mut layer: Vec<Vec<Var>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |&v| [w.clone(), vec![v]].concat()))
            .collect();
        all.extend(layer.iter().map(|w| Word::new(w.clone()).unwrap()));
    }
    all
}

fn brandt_of(g: &GroupTable, k: usize) -> FiniteSemigroup {
    brandt(g, k).unwrap().semigroup
}

fn z(m: usize) -> GroupTable {
    cyclic_group(m).unwrap()
}

fn c1_trahtman_basis_in_b2() -> Check {
    let s = b2().semigroup;
    for id in trahtman_basis() {
        let v = identity_holds(&s, &id, None).unwrap();
        ensure(v.holds, || format!("{id} fails"))?;
        ensure(v.evaluations_checked <= 25, || format!("{id}: {} evaluations", v.evaluations_checked))?;
        ensure(holds_naive(&s, id.lhs.symbols(), id.rhs.symbols()), || format!("oracle rejects {id}"))?;
    }
    Ok("3 identities".into())
}

fn c2_theorem_identities() -> Check {
    let cases = [(z(2), 2), (z(3), 3), (symmetric_group_3(), 6)];
    for (g, n) in &cases {
        let s = brandt_of(g, 2);
        for id in [exp_n(*n), exp_n_red(*n), commut(*n)] {
            ensure(holds(&s, &id), || format!("{id} fails in B(G,2), |G|={}", g.order()))?;
        }
    }
    for (g, n) in [(z(2), 2), (z(4), 4)] {
        let s = brandt_of(&g, 2);
        for w in abelian_positive_basis(n).words() {
            let id = Identity::new(w.pow(2), w.clone());
            ensure(holds(&s, &id), || format!("{id} fails for n={n}"))?;
        }
    }
    Ok("9 + 4 identities".into())
}

fn c3_brandt_identities_split() -> Check {
    let ws = words("xy", 5);
    let b2s = b2().semigroup;
    let mut count = 0;
    for g in [z(2), symmetric_group_3()] {
        let big = brandt_of(&g, 2);
        for l in &ws {
            for r in &ws {
                let id = Identity::new(l.clone(), r.clone());
                let left = holds(&big, &id);
                let right = holds_naive(g.carrier(), l.symbols(), r.symbols())
                    && holds_naive(&b2s, l.symbols(), r.symbols());
                ensure(left == right, || format!("{id} with |G|={}: {left} vs {right}", g.order()))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} identities, zero exceptions"))
}

fn c4_group_words_square_idempotent() -> Check {
    let s = brandt_of(&z(2), 2);
    let mut count = 0;
    for w in words("xy", 6) {
        // independent oracle: Z2 kills w iff every letter occurs an even number of times
        let parity = w.alphabet().iter().all(|&v| w.occurrences(v) % 2 == 0);
        let lib = group_satisfies_w_eq_1(&z(2), &w, None).unwrap().holds;
        ensure(parity == lib, || format!("group check disagrees on {w}"))?;
        if lib {
            let id = Identity::new(w.pow(2), w.clone());
            ensure(holds(&s, &id), || format!("{id} fails"))?;
            count += 1;
        }
    }
    Ok(format!("{count} words w with Z2 |= w=1"))
}

fn c5_powerset_construction() -> Check {
    let g = z(2);
    let p = powerset_semigroup(&g).unwrap().semigroup;
    ensure(p.size() == 6, || format!("{} elements", p.size()))?;
    for a in p.elements() {
        for b in p.elements() {
            for c in p.elements() {
                ensure(p.mul(p.mul(a, b), c) == p.mul(a, p.mul(b, c)), || "not associative".into())?;
            }
        }
    }
    let phi = phi_homomorphism(&g).unwrap();
    let t = phi.target();
    ensure(phi.is_surjective() && t.size() == 5, || "phi not onto a 5-element semigroup".into())?;
    ensure(find_isomorphism(t, &b2().semigroup).is_some(), || "target not isomorphic to B2".into())?;
    let zero = t.zero().ok_or("target has no zero")?;
    for y in t.elements() {
        let expected = if y == zero { 2 } else { 1 };
        ensure(phi.fiber(y).len() == expected, || format!("fiber over {y} has {} elements", phi.fiber(y).len()))?;
    }
    let e3 = brandt(&trivial_group(), 3).unwrap();
    for pair in [[0, 1], [0, 2], [1, 2]] {
        let r = restrict_brandt_to(&e3, &pair).unwrap();
        ensure(find_isomorphism(&r, &b2().semigroup).is_some(), || format!("restriction to {pair:?}"))?;
    }
    Ok("6 elements, phi onto B2, 3 restrictions".into())
}

fn replay_uses_exponent_rules(trace: &RewriteTrace) -> Result<(), String> {
    for step in &trace.steps {
        ensure(matches!(step.tag, RuleTag::ExpN | RuleTag::ExpNRed), || format!("rule {}", step.tag))?;
        let again = apply_rule_at(&step.before, &step.rule, step.position, &step.substitution, step.direction)
            .map_err(|e| e.to_string())?;
        ensure(again == step.after, || format!("step {step} does not replay"))?;
    }
    trace.replay().map(|_| ()).map_err(|e| e.to_string())
}

fn repeated_words() -> Vec<Word> {
    words("xyz", 6).into_iter().filter(|w| is_repeated(w).0).collect()
}

fn c6_rewrite_soundness() -> Check {
    let s = brandt_of(&z(2), 2);
    let corpus = repeated_words();
    for w in &corpus {
        let (w1, mut trace) = eliminate_single_occurrences(w, 2).map_err(|e| format!("{w}: {e}"))?;
        let (cf, more) = cell_decompose(&w1, 2).map_err(|e| format!("{w}: {e}"))?;
        trace.extend(more);
        replay_uses_exponent_rules(&trace).map_err(|e| format!("{w}: {e}"))?;
        let flat = cf.flatten();
        ensure(trace.is_empty() || trace.steps.last().unwrap().after == flat, || format!("{w}: trace end"))?;
        ensure(holds_naive(&s, w.symbols(), flat.symbols()), || format!("{w} != {flat} in B(Z2,2)"))?;
    }
    Ok(format!("{} repeated words", corpus.len()))
}

fn c7_regularity_witness() -> Check {
    let corpus = repeated_words();
    for (g, n) in [(z(2), 2), (z(3), 3)] {
        let s = brandt_of(&g, 2);
        for w in &corpus {
            let (w1, _) = eliminate_single_occurrences(w, n).map_err(|e| e.to_string())?;
            let (cf, _) = cell_decompose(&w1, n).map_err(|e| e.to_string())?;
            let h = cf.flatten();
            let hs = star_word(&cf).map_err(|e| e.to_string())?;
            let hhh = h.concat(&hs).concat(&h);
            let shs = hs.concat(&h).concat(&hs);
            ensure(holds_naive(&s, hhh.symbols(), h.symbols()), || format!("h h* h != h for {w}, n={n}"))?;
            ensure(holds_naive(&s, shs.symbols(), hs.symbols()), || format!("h* h h* != h* for {w}, n={n}"))?;
        }
    }
    Ok(format!("{} words, n = 2 and 3", corpus.len()))
}

fn c8_separation() -> Check {
    let cases = [
        ("B2", b2().semigroup, 2),
        ("B(Z2,2)", brandt_of(&z(2), 2), 2),
        ("Z4^0", adjoin_zero(z(4).carrier()), 4),
    ];
    let mut pairs = 0;
    for (name, s, n) in &cases {
        let zero = s.structural_zero();
        let regular: Vec<Element> = s.elements().filter(|&x| s.is_regular(x)).collect();
        for &z in regular.iter().filter(|&&z| Some(z) != zero) {
            let c = rho_z(s, z);
            for x in s.elements() {
                for y in s.elements().filter(|&y| c.related(x, y)) {
                    for t in s.elements() {
                        ensure(c.related(s.mul(x, t), s.mul(y, t)) && c.related(s.mul(t, x), s.mul(t, y)), || {
                            format!("{name}: rho_{z} not compatible")
                        })?;
                    }
                }
            }
            let kind = rho_quotient(s, z).quotient_class.kind;
            ensure(kind != Kind::Other, || format!("{name}: quotient by rho_{z} is Other"))?;
        }
        for &a in &regular {
            for &b in regular.iter().filter(|&&b| b != a) {
                let r = separate_regular_pair(s, a, b, *n).map_err(|e| format!("{name} ({a},{b}): {e}"))?;
                ensure(r.hom.apply(a) != r.hom.apply(b), || format!("{name}: ({a},{b}) not separated"))?;
                pairs += 1;
            }
        }
    }
    let b = b2();
    let e11 = b.coords.encode(0, 0, 0);
    ensure(rho_z(&b.semigroup, e11).is_equality(), || "rho_(1,1,1) on B2 is not equality".into())?;
    let q = rho_quotient(&b.semigroup, e11);
    ensure(find_isomorphism(q.hom.target(), &b.semigroup).is_some(), || "B2 / rho not B2".into())?;
    Ok(format!("{pairs} ordered regular pairs separated"))
}

fn c9_classification() -> Check {
    for (g, k) in [(trivial_group(), 2), (z(2), 2), (z(3), 3), (symmetric_group_3(), 2)] {
        let s = brandt_of(&g, k);
        let c = classify(&s);
        ensure(c.kind == Kind::Brandt, || format!("B(G,{k}) classified {}", c.kind))?;
        ensure(c.index_size == Some(k), || format!("index size {:?}", c.index_size))?;
        let q = c.group_part.as_ref().ok_or("no group part")?;
        ensure(find_isomorphism(q.carrier(), g.carrier()).is_some(), || "group part not isomorphic".into())?;
        let w = c.witness.as_ref().ok_or("no witness")?;
        ensure(w.is_isomorphism(), || "witness not bijective".into())?;
        ensure(find_isomorphism(&s, &brandt_of(q, k)).is_some(), || "no isomorphism to the model".into())?;
    }
    ensure(classify(z(4).carrier()).kind == Kind::Group, || "Z4".into())?;
    ensure(classify(&adjoin_zero(z(4).carrier())).kind == Kind::GroupWithZero, || "Z4^0".into())?;
    Ok("4 Brandt semigroups, Z4, Z4^0".into())
}

fn c10_ln_identities() -> Check {
    let s = b2().semigroup;
    for k in 1..=4 {
        ensure(holds(&s, &ln_identity(k)), || format!("L{k} fails in B2"))?;
    }
    let g = z(2).direct_product(&symmetric_group_3());
    let big = brandt_of(&g, 2);
    ensure(big.size() == 49, || format!("{} elements", big.size()))?;
    let mut evaluations = 0;
    for k in 1..=3 {
        let v = identity_holds(&big, &ln_identity(k), None).unwrap();
        ensure(v.holds, || format!("L{k} fails in B(Z2xS3,2)"))?;
        evaluations += v.evaluations_checked;
    }
    Ok(format!("{evaluations} evaluations in B(Z2xS3,2)"))
}

fn c11_abelian_identities() -> Check {
    for (name, s) in [("B2", b2().semigroup), ("B(Z4,2)", brandt_of(&z(4), 2))] {
        for id in [abelian1(), abelian2()] {
            ensure(holds(&s, &id), || format!("{id} fails in {name}"))?;
        }
    }
    let id = abelian2();
    let trace = derive_bounded(&id, &trahtman_basis(), DeriveBounds::default()).ok_or("no derivation found")?;
    ensure(trace.steps.first().map(|s| &s.before) == Some(&id.lhs), || "trace start".into())?;
    let end = trace.replay().map_err(|e| e.to_string())?;
    ensure(end.as_ref() == Some(&id.rhs), || "trace end".into())?;
    Ok(format!("derivation of {} steps", trace.len()))
}

fn random_word(rng: &mut ChaCha8Rng) -> Word {
    let len = rng.random_range(1..=6);
    Word::new(random_symbols(rng, len)).unwrap()
}

/// A word with one instance of an exponent rule applied inside it.
fn rule_application(rng: &mut ChaCha8Rng) -> Result<Identity, String> {
    let (tag, rule) = if rng.random_bool(0.5) { (RuleTag::ExpN, exp_n(2)) } else { (RuleTag::ExpNRed, exp_n_red(2)) };
    let sub = Substitution::from_pairs(rule.variables().into_iter().map(|v| {
        let len = rng.random_range(1..=2);
        (v, Word::new(random_symbols(rng, len)).unwrap())
    }));
    let (pre, post) = (rng.random_range(0..=2), rng.random_range(0..=2));
    let prefix = random_symbols(rng, pre);
    let suffix = random_symbols(rng, post);
    let instance = sub.apply(&rule.lhs).map_err(|e| e.to_string())?;
    let before = Word::new([prefix.as_slice(), &instance, &suffix].concat()).unwrap();
    let after = apply_rule_at(&before, &rule, prefix.len(), &sub, Direction::LeftToRight)
        .map_err(|e| format!("{tag} at {}: {e}", prefix.len()))?;
    Ok(Identity::new(before, after))
}

fn random_symbols(rng: &mut ChaCha8Rng, len: usize) -> Vec<Var> {
    (0..len).map(|_| Var::new(['x', 'y', 'z'][rng.random_range(0..3)])).collect()
}

fn c12_mirror_duality() -> Check {
    let s = brandt_of(&z(2), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(0x005e_edb2);
    let mut holding = 0;
    for i in 0..200 {
        let id = if i < 100 {
            Identity::new(random_word(&mut rng), random_word(&mut rng))
        } else {
            let id = rule_application(&mut rng)?;
            ensure(holds(&s, &id), || format!("rule instance {id} fails"))?;
            id
        };
        let direct = holds(&s, &id);
        let mirrored = holds(&s, &id.mirror());
        ensure(direct == mirrored, || format!("{id}: {direct} vs mirror {mirrored}"))?;
        holding += usize::from(direct);
    }
    Ok(format!("200 identities, {holding} hold"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("1 trahtman basis in B2", c1_trahtman_basis_in_b2, Duration::from_secs(1)),
        ("2 exponent identities in B(G,2)", c2_theorem_identities, Duration::from_secs(10)),
        ("3 B(G,2) identities = G and B2 identities", c3_brandt_identities_split, Duration::from_secs(60)),
        ("4 group words give idempotent squares", c4_group_words_square_idempotent, Duration::from_secs(30)),
        ("5 power-set semigroup of Z2", c5_powerset_construction, Duration::from_secs(10)),
        ("6 rewrite soundness", c6_rewrite_soundness, Duration::from_secs(60)),
        ("7 star word is an inverse", c7_regularity_witness, Duration::from_secs(60)),
        ("8 separation of regular pairs", c8_separation, Duration::from_secs(60)),
        ("9 classification round trip", c9_classification, Duration::from_secs(60)),
        ("10 L_n identities", c10_ln_identities, Duration::from_secs(120)),
        ("11 abelian identities and derivation", c11_abelian_identities, Duration::from_secs(60)),
        ("12 mirror duality", c12_mirror_duality, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) if elapsed <= limit => format!("PASS  {name}: {detail}"),
            Ok(detail) => format!("FAIL  {name}: {detail}, took {elapsed:.2?} > {limit:?}"),
            Err(reason) => format!("FAIL  {name}: {reason}"),
        };
        if outcome.starts_with("FAIL") {
            failed += 1;
        }
        println!("{outcome} [{elapsed:.2?}]");
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
