//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

/// Hand transcriptions of the printed expressions, in parser syntax.
/// `Qt*` are the same polynomials in the times.
pub const TRANSCRIPTIONS: &[(&str, &str)] = &[
    ("P1", "z + c1"),
    ("P2", "(z^3 + 3*c1*z^2 + 3*c1^2*z + 3*c2)/3"),
    ("P3", "(z^6 + 6*c1*z^5 + 15*c1^2*z^4 + 15*(c1^3 + c2)*z^3 + 45*c1*c2*z^2 + 45*(c2^2/c1 + c3/c1)*z + 45*c3)/45"),
    (
        "P4",
        "(z^10 + 10*c1*z^9 + 45*c1^2*z^8 + 15*(7*c1^3 + 3*c2)*z^7 + 105*(c1^4 + 3*c2*c1)*z^6 \
         + 315*(c2^2/c1 + c3/c1 + 2*c1^2*c2)*z^5 + 1575*(c2^2 + c3)*z^4 \
         + 1575*(c2^3/c1^2 + c1*c3 + c4/c2 + c3^2/(c1^2*c2) + 2*c3*c2/c1^2)*z^3 \
         + 4725*(c3^2/(c1*c2) + c2*c3/c1 + c1*c4/c2)*z^2 + 4725*(c3^2/c2 + c1^2*c4/c2)*z + 4725*c4)/4725",
    ),
    ("Q1", "z + q1"),
    ("Q2", "z*(z^2-1)/3 + q1*z^2 + q1^2*z + q2"),
    (
        "Q3",
        "z^2*(z^2-1)*(z^2-4)/45 + 2*q1*z^5/15 + q1^2*z^4/3 + (q1^3-q1+q2)*z^3/3 + (3*q1*q2-q1^2)*z^2/3 \
         + (q3/q1 + q2^2/q1 + 2*q2/3 - q1^3/3 + q1/5)*z + q3",
    ),
    ("Qt1", "z + t1"),
    ("Qt2", "(z*(z^2-1) + 3*t1*z^2 + 3*t1^2*z + t1^3 - t3)/3"),
    (
        "Qt3",
        "(z^2*(z^2-1)*(z^2-4) + 6*t1*z^5 + 15*t1^2*z^4 + (20*t1^3 - 5*t3 - 15*t1)*z^3 + 15*t1*(t1^3 - t1 - t3)*z^2 \
         + (9*t1 - 10*t3 + 9*t5 - 15*t1^2*t3 - 5*t1^3 + 6*t1^5)*z + t1^6 - 5*t3^2 - 5*t1^3*t3 + 9*t1*t5)/45",
    ),
    ("t1", "q1"),
    ("t2", "t1^2"),
    ("t3", "-3*q2 + q1^3"),
    ("t4", "4/3*t1*t3 - 1/3*t1^4"),
    ("t5", "(5*q3 - 5*q1^3*q2 + 5*q2^2 + q1^6)/q1"),
    (
        "t7",
        "-(7*q1^2*q4 + 14*q2^2*q3 - q1^9*q2 + 7*q3^2 + 7*q2^4 - 14*q1^3*q2^3 + 7*q1^6*q2^2 - 7*q1^3*q2*q3)/(q1^2*q2)",
    ),
    ("q1", "t1"),
    ("q2", "-1/3*t3 + 1/3*t1^3"),
    ("q3", "1/5*t1*t5 - 1/9*t3^2 - 1/9*t1^3*t3 + 1/45*t1^6"),
    (
        "q4",
        "1/21*(t3 - t1^3)*t7 - 1/25*t5^2 + 1/15*t1^2*t3*t5 + 1/75*t1^5*t5 - 1/27*t1*t3^3 - 1/315*t1^7*t3 + 1/4725*t1^10",
    ),
    ("Q0_1", "z"),
    ("Q0_2", "z*(z^2-1)/3"),
    ("Q0_3", "z^2*(z^2-1)*(z^2-4)/45"),
    ("Q0_4", "z^2*(z^2-1)^2*(z^2-4)*(z^2-9)/4725"),
    ("Q0_5", "z^3*(z^2-1)^2*(z^2-4)^2*(z^2-9)*(z^2-16)/4465125"),
    ("Q0_6", "z^3*(z^2-1)^3*(z^2-4)^2*(z^2-9)^2*(z^2-16)*(z^2-25)/46414974375"),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden/paper")
}

/// Canonical text of a golden file, without the trailing newline.
pub fn golden(name: &str) -> String {
    let path = golden_dir().join(format!("{name}.txt"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display())).trim_end().to_string()
}

pub fn golden_zpoly(name: &str) -> bchlab::ZPoly {
    bchlab::rings::parse_zpoly(&golden(name)).unwrap()
}

pub fn golden_laurent(name: &str) -> bchlab::LaurentPoly {
    bchlab::rings::parse_laurent(&golden(name)).unwrap()
}
