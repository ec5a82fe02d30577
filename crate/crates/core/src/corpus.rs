//! The bundled example corpus with its expected reports.

pub struct Case {
    pub name: &'static str,
    pub input: &'static str,
    pub expected: &'static str,
}

pub const CASES: &[Case] = &[
    Case {
        name: "introduction",
        input: include_str!("../corpus/introduction.json"),
        expected: include_str!("../corpus/expected/introduction.json"),
    },
    Case {
        name: "rank_one",
        input: include_str!("../corpus/rank_one.json"),
        expected: include_str!("../corpus/expected/rank_one.json"),
    },
    Case {
        name: "actionondiv",
        input: include_str!("../corpus/actionondiv.json"),
        expected: include_str!("../corpus/expected/actionondiv.json"),
    },
    Case {
        name: "rank2rubber2",
        input: include_str!("../corpus/rank2rubber2.json"),
        expected: include_str!("../corpus/expected/rank2rubber2.json"),
    },
    Case {
        name: "diagonal_refinement",
        input: include_str!("../corpus/diagonal_refinement.json"),
        expected: include_str!("../corpus/expected/diagonal_refinement.json"),
    },
    Case {
        name: "noncomplete",
        input: include_str!("../corpus/noncomplete.json"),
        expected: include_str!("../corpus/expected/noncomplete.json"),
    },
    Case {
        name: "tube_example",
        input: include_str!("../corpus/tube_example.json"),
        expected: include_str!("../corpus/expected/tube_example.json"),
    },
    Case {
        name: "unused_ray",
        input: include_str!("../corpus/unused_ray.json"),
        expected: include_str!("../corpus/expected/unused_ray.json"),
    },
    Case {
        name: "bad_integrality",
        input: include_str!("../corpus/bad_integrality.json"),
        expected: include_str!("../corpus/expected/bad_integrality.json"),
    },
    Case {
        name: "bad_saturation",
        input: include_str!("../corpus/bad_saturation.json"),
        expected: include_str!("../corpus/expected/bad_saturation.json"),
    },
    Case {
        name: "improper_overlap",
        input: include_str!("../corpus/improper_overlap.json"),
        expected: include_str!("../corpus/expected/improper_overlap.json"),
    },
];

pub fn case(name: &str) -> Option<&'static Case> {
    CASES.iter().find(|c| c.name == name)
}
