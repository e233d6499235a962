//! Round-trip property: printing a canonical expression and parsing it back
//! is the identity, exercised on 200 generated trees.

use tropnev_cli::expr::{parse_expr, print_expr, Expr};
use tropnev_core::scalar::rat;
use tropnev_core::suites::SplitMix64;

// Canonical generator: constants are nonnegative (negation is explicit) and
// sums/differences associate to the left, matching what the parser builds.
fn gen(rng: &mut SplitMix64, depth: usize) -> Expr {
    if depth == 0 {
        return match rng.below(3) {
            0 => Expr::Const(rat(rng.int_in(0, 9), rng.int_in(1, 4))),
            1 => Expr::X,
            _ => Expr::ScaledX(rat(rng.int_in(-6, 6), rng.int_in(1, 3))),
        };
    }
    match rng.below(5) {
        0 => {
            let k = rng.int_in(2, 3) as usize;
            Expr::Max((0..k).map(|_| gen(rng, depth - 1)).collect())
        }
        1 => Expr::Add(Box::new(gen(rng, depth - 1)), Box::new(gen(rng, 0))),
        2 => Expr::Sub(Box::new(gen(rng, depth - 1)), Box::new(gen(rng, 0))),
        3 => Expr::Shift(
            Box::new(gen(rng, depth - 1)),
            Box::new(Expr::Const(rat(rng.int_in(0, 5), rng.int_in(1, 2)))),
        ),
        _ => Expr::Neg(Box::new(gen(rng, depth - 1))),
    }
}

#[test]
fn parse_print_roundtrip() {
    let mut rng = SplitMix64::new(0xE0);
    for case in 0..200 {
        let e = gen(&mut rng, 2 + (case % 3) as usize);
        let printed = print_expr(&e);
        let parsed = parse_expr(&printed, 1)
            .unwrap_or_else(|err| panic!("case {}: '{}' failed: {}", case, printed, err));
        assert_eq!(parsed, e, "case {}: '{}'", case, printed);
    }
}
