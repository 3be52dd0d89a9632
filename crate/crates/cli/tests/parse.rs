use proptest::prelude::*;
use realforms_cli::expr::{parse_group_spec, Atom, GroupExpr};
use realforms_core::builders::ACTION_NAMES;

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (1usize..40).prop_map(Atom::Cyclic),
        (3usize..20).prop_map(|n| Atom::Dihedral(2 * n)),
        (3u32..7).prop_map(|s| Atom::Quaternion(1 << s)),
        (1usize..7).prop_map(Atom::Symmetric),
        (1usize..7).prop_map(Atom::Alternating),
        prop_oneof![Just(7usize), Just(9)].prop_map(Atom::Psl2),
        Just(Atom::Hessian216),
        (3usize..12).prop_map(Atom::Fermat),
        (2usize..6).prop_map(|d| Atom::Xd(2 * d)),
        (3u32..9, 1u32..4).prop_map(|(s, t)| Atom::CycMat(s, t)),
    ]
}

fn expr() -> impl Strategy<Value = GroupExpr> {
    let leaf = prop_oneof![
        atom().prop_map(GroupExpr::Atom),
        (atom(), 1usize..4).prop_map(|(a, k)| GroupExpr::Power(a, k)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| GroupExpr::Product(Box::new(l), Box::new(r))),
            (inner.clone(), inner, 0..ACTION_NAMES.len()).prop_map(|(l, r, k)| GroupExpr::Semidirect {
                left: Box::new(l),
                right: Box::new(r),
                action: ACTION_NAMES[k].to_string(),
            }),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let printed = e.to_string();
        let parsed = parse_group_spec(&printed).unwrap();
        prop_assert_eq!(&parsed, &e);
        prop_assert_eq!(parsed.to_string(), printed);
    }

    #[test]
    fn whitespace_is_insignificant(e in expr()) {
        let printed = e.to_string();
        let spaced: String = printed
            .chars()
            .flat_map(|c| if "()^:@,x".contains(c) { vec![' ', c, ' '] } else { vec![c] })
            .collect();
        let squeezed: String = printed.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_group_spec(&spaced).unwrap(), e.clone());
        prop_assert_eq!(parse_group_spec(&squeezed).unwrap(), e);
    }

    #[test]
    fn parser_never_panics(text in "[A-Za-z0-9()^:@,x _]{0,24}") {
        if let Err(err) = parse_group_spec(&text) {
            prop_assert!(err.offset <= text.len());
            prop_assert!(!err.expected.is_empty());
        }
    }
}
