//! Explicit dual generators for Γ, copied verbatim in LaTeX form and parsed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use costress::datasets;
use costress::inverse;
use costress::poly::{contract, DualPolynomial, ExponentVector, Polynomial};
use costress::Field;

const F1: &str = r"-2\,x_{0}^{3}-2\,x_{1}^{3}+x_{1}^{2}x_{2}+x_{2}^{3}+x_{1}^{2}x_{3}-x_{1}x_{2}x_{3}+x_{2}x_{3}^{2}+x_{1}^{2}x_{4}-x_{1}
      x_{3}x_{4}+x_{3}x_{4}^{2}+x_{1}^{2}x_{5}-x_{1}x_{2}x_{5}-x_{1}x_{4}x_{5}+x_{2}x_{5}^{2}+x_{4}x_{5}^{2}-x_{5}^{3}+x_{0
      }^{2}x_{6}+x_{3}^{2}x_{6}-x_{3}x_{4}x_{6}+x_{3}x_{6}^{2}+x_{0}^{2}x_{7}+x_{2}^{2}x_{7}+x_{4}^{2}x_{7}-x_{2}x_{5}x_{7}-x
      _{4}x_{5}x_{7}+x_{5}^{2}x_{7}-x_{0}x_{6}x_{7}-x_{4}x_{6}x_{7}+x_{6}^{2}x_{7}+x_{2}x_{7}^{2}+x_{4}x_{7}^{2}-x_{5}x_{7}^{
      2}+x_{7}^{3}+x_{0}^{2}x_{8}-x_{2}^{2}x_{8}-x_{0}x_{7}x_{8}-x_{2}x_{7}x_{8}+x_{2}x_{8}^{2}+x_{7}x_{8}^{2}-x_{8}^{3}+x_{0
      }^{2}x_{9}+x_{2}^{2}x_{9}-x_{2}x_{3}x_{9}-x_{0}x_{6}x_{9}-x_{3}x_{6}x_{9}-x_{0}x_{8}x_{9}-x_{2}x_{8}x_{9}+x_{8}^{2}x_{9
      }+x_{2}x_{9}^{2}+x_{6}x_{9}^{2}";

const F2: &str = r"-3\,x_{1}^{3}-x_{1}^{2}x_{2}+x_{1}x_{2}^{2}+2\,x_{1}^{2}x_{3}+2\,x_{1}x_{2}x_{3}+4\,x_{3}^{3}+4\,x_{1}^{2}x_{4}-4\,x_{1}x_{3}x
       _{4}-4\,x_{3}^{2}x_{4}-4\,x_{1}x_{4}^{2}+4\,x_{3}x_{4}^{2}-4\,x_{4}^{3}-2\,x_{1}^{2}x_{5}-2\,x_{1}x_{2}x_{5}+4\,x_{1}x_{4}x_{5}-
       4\,x_{3}^{2}x_{6}+4\,x_{3}x_{4}x_{6}-4\,x_{4}^{2}x_{6}+4\,x_{3}x_{6}^{2}-4\,x_{4}x_{6}^{2}-4\,x_{6}^{3}-8\,x_{0}^{2}x_{7}+8\,x_{
       4}^{2}x_{7}+2\,x_{2}x_{5}x_{7}-4\,x_{4}x_{5}x_{7}-4\,x_{0}x_{6}x_{7}+4\,x_{4}x_{6}x_{7}+8\,x_{0}x_{7}^{2}-8\,x_{4}x_{7}^{2}+2\,x
       _{5}x_{7}^{2}+4\,x_{0}x_{7}x_{8}-2\,x_{2}x_{7}x_{8}-2\,x_{7}^{2}x_{8}+8\,x_{0}^{2}x_{9}-x_{2}^{2}x_{9}-2\,x_{2}x_{3}x_{9}+4\,x_{
       3}^{2}x_{9}+4\,x_{0}x_{6}x_{9}-4\,x_{3}x_{6}x_{9}+4\,x_{6}^{2}x_{9}-4\,x_{0}x_{8}x_{9}+2\,x_{2}x_{8}x_{9}-8\,x_{0}x_{9}^{2}+x_{2
       }x_{9}^{2}+2\,x_{3}x_{9}^{2}-4\,x_{6}x_{9}^{2}+2\,x_{8}x_{9}^{2}+7\,x_{9}^{3}";

/// Parses sums of `c\,x_{i}^{k}x_{j}…` terms with integer coefficients.
fn parse_latex(src: &str, n: usize) -> Vec<(Vec<u32>, i64)> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace("\\,", "");
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    let number = |i: &mut usize| {
        let start = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        s[start..*i].parse::<u32>().ok()
    };
    while i < b.len() {
        let sign = match b[i] {
            b'-' => { i += 1; -1 }
            b'+' => { i += 1; 1 }
            _ => 1,
        };
        let coeff = number(&mut i).unwrap_or(1) as i64 * sign;
        let mut e = vec![0u32; n];
        while i < b.len() && b[i] == b'x' {
            assert_eq!(&s[i..i + 3], "x_{");
            i += 3;
            let v = number(&mut i).unwrap() as usize;
            i += 1;
            let mut k = 1;
            if s[i..].starts_with("^{") {
                i += 2;
                k = number(&mut i).unwrap();
                i += 1;
            }
            e[v] += k;
        }
        out.push((e, coeff));
    }
    out
}

fn dual(src: &str) -> DualPolynomial {
    let terms = parse_latex(src, 10)
        .into_iter()
        .map(|(e, c)| (ExponentVector(e), BigRational::from_integer(BigInt::from(c))));
    DualPolynomial::from_terms(10, 3, terms).unwrap()
}

fn check_generator(f: &DualPolynomial, system: &[Polynomial]) {
    let gamma = datasets::gamma();
    for e in f.terms().keys() {
        assert!(gamma.is_face(&e.support()), "term {e:?} is not supported on a face");
    }
    for theta in system {
        assert!(contract(theta, f).unwrap().is_zero(), "a linear form does not annihilate");
    }
    let perp = inverse::perp_basis(&gamma, system, 3, Field::Rationals).unwrap();
    assert_eq!(perp.len(), 1);
    let basis = perp[0].terms();
    let (m, c) = basis.iter().next().unwrap();
    let ratio = f.coefficient(m) / c;
    assert!(!ratio.is_zero());
    assert_eq!(f.len(), basis.len());
    for (m, c) in basis {
        assert_eq!(f.coefficient(m), c * &ratio, "not proportional at {m:?}");
    }
}

#[test]
fn parser_reads_every_term() {
    assert_eq!(parse_latex(F1, 10).len(), 50);
    assert_eq!(parse_latex(F2, 10).len(), 48);
    assert!(parse_latex(F1, 10).iter().all(|(e, _)| e.iter().sum::<u32>() == 3));
}

#[test]
fn first_lsop_generator_spans_top_degree() {
    check_generator(&dual(F1), &datasets::gamma_lsop());
}

#[test]
fn second_lsop_generator_spans_top_degree() {
    check_generator(&dual(F2), &datasets::gamma_lsop_with_sum());
}
