use super::*;

fn st(n: u8, m: &[u8]) -> IState {
    IState::new(n, m).unwrap()
}

#[test]
fn istate_enumeration() {
    let v = enumerate_istates(2, 1).unwrap();
    assert_eq!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>(), ["{0}", "{1}", "{2}"]);
    assert_eq!(enumerate_istates(2, 0).unwrap(), vec![st(2, &[])]);
    assert_eq!(enumerate_istates(3, 2).unwrap().len(), 6);
    assert!(enumerate_istates(2, 4).is_err());
}

#[test]
fn reduce_examples() {
    let b = AlgebraId::b(2).algebra();
    let w = |s: &str| types::parse_word(s).unwrap();
    let lr = b.reduce_path(st(2, &[1]), &w("L1 R1")).unwrap();
    assert_eq!(lr, Element::single(b.mono(st(2, &[1]), "U1")));
    assert!(b.reduce_path(st(2, &[0]), &w("R1 R2")).unwrap().is_zero());
    assert!(b.reduce_path(st(2, &[1]), &w("U1 U2")).unwrap().is_zero());
    let u = b.reduce_path(st(2, &[0, 1]), &w("U1 U2")).unwrap();
    assert_eq!(u.len(), 1);
    assert_eq!(u.first().unwrap().to_string(), "{0,1}|U1 U2|{0,1}");
}

#[test]
fn generator_examples() {
    let b = AlgebraId::b(2).algebra();
    assert!(b.generator(LetterKind::U, 1, st(2, &[2])).unwrap().is_zero());
    let r = b.generator(LetterKind::R, 1, st(2, &[0])).unwrap();
    assert_eq!(r.first().unwrap().target(), st(2, &[1]));
    assert!(matches!(b.generator(LetterKind::R, 1, st(2, &[1])), Err(AlgebraError::ArrowAbsent { .. })));
    assert!(b.generator(LetterKind::C, 1, st(2, &[1])).is_err());
}

#[test]
fn multiply_examples() {
    let b = AlgebraId::b(2).algebra();
    let one = Element::single(b.idempotent(st(2, &[1])));
    let u1 = Element::single(b.mono(st(2, &[1]), "U1"));
    assert_eq!(b.multiply(&one, &u1), u1);
    let r2 = Element::single(b.mono(st(2, &[0, 1]), "R2"));
    let r1 = Element::single(b.mono(st(2, &[0, 2]), "R1"));
    let p = b.multiply(&r2, &r1);
    assert_eq!(p.first().unwrap().to_string(), "{0,1}|R2 R1|{1,2}");
    let l2 = Element::single(b.mono(st(2, &[2]), "L2"));
    let l1 = Element::single(b.mono(st(2, &[1]), "L1"));
    assert!(b.multiply(&l2, &l1).is_zero());
    // mismatched idempotents
    assert!(b.multiply(&l1, &l2).is_zero());
}

#[test]
fn opposite_multiplication() {
    let op = AlgebraId::b(2).opposite().algebra();
    let r2 = Element::single(op.mono(st(2, &[0, 1]), "R2"));
    let r1 = Element::single(op.mono(st(2, &[0, 2]), "R1"));
    assert!(op.multiply(&r2, &r1).is_zero());
    assert_eq!(op.multiply(&r1, &r2).len(), 1);
}

#[test]
fn differential_examples() {
    let a = AlgebraId::bshriek(2).algebra();
    let x = st(2, &[0, 1]);
    let c1 = a.mono(x, "C1");
    assert_eq!(a.differential_mono(&c1), Element::single(a.mono(x, "U1")));
    let c1c2 = a.mono(x, "C1 C2");
    let expect: Element = [a.mono(x, "U1 C2"), a.mono(x, "C1 U2")].into_iter().collect();
    assert_eq!(a.differential_mono(&c1c2), expect);
    assert!(a.differential_mono(&a.mono(x, "U1")).is_zero());
    let b = AlgebraId::b(2).algebra();
    assert!(b.differential_mono(&b.mono(x, "U1")).is_zero());
}

#[test]
fn degree_examples() {
    let b = AlgebraId::b(2).algebra();
    let d = b.degree(&b.mono(st(2, &[0]), "R1 U1"));
    assert_eq!(d, Degree::from_quarters(0, vec![8, 4, 0, 0]));
    let s = AlgebraId::bshriek(2).algebra();
    let d = s.degree(&s.mono(st(2, &[0]), "C2"));
    assert_eq!(d, Degree::from_quarters(1, vec![0, 0, -4, -4]));
    assert_eq!(b.degree(&b.idempotent(st(2, &[0]))), Degree::zero(2));
}

#[test]
fn basis_in_degree_examples() {
    let b = AlgebraId::b(2).algebra();
    let d = Degree::from_quarters(0, vec![4, 4, 0, 0]);
    assert!(b.basis_in_degree(st(2, &[0]), st(2, &[2]), &d).is_empty());
    let all = Degree::from_quarters(0, vec![4, 4, 4, 4]);
    assert!(b.basis_in_degree(st(2, &[1]), st(2, &[1]), &all).is_empty());
    let v = b.basis_in_degree(st(2, &[0, 1]), st(2, &[0, 1]), &d);
    assert_eq!(v.iter().map(|m| m.word_string()).collect::<Vec<_>>(), ["U1"]);
}

#[test]
fn factor_pair_examples() {
    let b = AlgebraId::b(2).algebra();
    let x = st(2, &[0, 2]);
    let f = b.factor_pairs(&b.mono(x, "U1"));
    let s: Vec<_> = f.iter().map(|(a, c)| (a.word_string(), c.word_string())).collect();
    assert_eq!(s, [("R1".to_string(), "L1".to_string())]);
    let f = b.factor_pairs(&b.mono(x, "L2 U1"));
    let mut s: Vec<_> = f.iter().map(|(a, c)| (a.word_string(), c.word_string())).collect();
    s.sort();
    let mut expect = [("L2", "U1"), ("U1", "L2"), ("R1", "L1 L2")];
    expect.sort();
    assert_eq!(s, expect.iter().map(|(a, c)| (a.to_string(), c.to_string())).collect::<Vec<_>>());
    assert!(b.factor_pairs(&b.mono(st(2, &[0]), "R1")).is_empty());
}

#[test]
fn symmetry_examples() {
    let b = AlgebraId::b(2).algebra();
    let r1 = b.mono(st(2, &[0]), "R1");
    let img = b.map_monomial(Symmetry::R, &r1);
    let m = img.first().unwrap();
    assert_eq!(m.to_string(), "{2}|L2|{1}");
    let u1 = b.mono(st(2, &[1]), "U1");
    let (id, o) = b.apply_symmetry(Symmetry::O, &Element::single(u1.clone()));
    assert_eq!(id, AlgebraId::b(2).opposite());
    assert_eq!(o, Element::single(u1));
    let x = b.mono(st(2, &[2]), "L2 U2");
    let once = b.map_monomial(Symmetry::R, &x);
    let twice = b.map_monomial(Symmetry::R, once.first().unwrap());
    assert_eq!(twice, Element::single(x));
}

#[test]
fn augmentation() {
    let b = AlgebraId::b(2).algebra();
    let one = b.idempotent(st(2, &[1]));
    let u1 = b.mono(st(2, &[1]), "U1");
    let r1 = b.mono(st(2, &[0]), "R1");
    assert_eq!(b.augment(&Element::single(one.clone())), Element::single(one.clone()));
    assert!(b.augment(&Element::single(r1)).is_zero());
    let s: Element = [one.clone(), u1].into_iter().collect();
    assert_eq!(b.augment(&s), Element::single(one));
}

#[test]
fn text_round_trip() {
    let b = AlgebraId::b(2).algebra();
    let m = b.parse_monomial("{0,1}|R2 R1 U1|{1,2}").unwrap();
    assert_eq!(m.to_string(), "{0,1}|R2 R1 U1|{1,2}");
    let m = b.parse_monomial("{0,1}|U1 R2 R1|{1,2}").unwrap();
    assert_eq!(m.to_string(), "{0,1}|R2 R1 U1|{1,2}");
    let e = b.parse_monomial("{1}||{1}").unwrap();
    assert!(e.is_idempotent());
    assert_eq!("B!(3)^op".parse::<AlgebraId>().unwrap(), AlgebraId::bshriek(3).opposite());
}
