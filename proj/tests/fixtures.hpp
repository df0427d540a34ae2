/*
 * Frozen golden fixtures: the two-amino-acid worked decoding scenario.
 *
 * Frame: six codons c1..c6 with A1 = {c1,c2,c3,c4}, A2 = {c4,c5}; the
 * shared codon c4 makes the possibilities overlap. The three nucleotide
 * bodies and every combined row below are written out as literal
 * rationals: the combination and evaluation tests must reproduce them
 * exactly, never compute them.
 *
 *   step1               {A1: 1/3, A2: 1/3, theta: 1/3}
 *   step2 = s1 (x) s1   {A1: 3/9, A2: 3/9, A1^A2: 2/9, theta: 1/9}
 *   step3 decided       {A2: 4/9, A1^A2: 5/9}          (third body {A2: 1})
 *   step3 undecided     identical to step2              (third body {theta: 1})
 *
 * Table-mode evaluations, frozen:
 *   step1:          Bel(A1)=Pl(A1)=Bel(A2)=Pl(A2)=1/3
 *   step2:          Bel=3/9 and Pl=5/9 for both
 *   step3 decided:  Bel(A1)=0, Pl(A1)=5/9, Bel(A2)=4/9, Pl(A2)=1
 *   step3 undecided: as step2
 */

#pragma once

#include <evidentia/evidentia.hpp>

#include <vector>

namespace fixtures {

using evidentia::BodyOfEvidence;
using evidentia::FocalElement;
using evidentia::FramePtr;
using evidentia::Rational;
using evidentia::Regime;

inline FramePtr frame() { return evidentia::toy_frame(); }

inline FocalElement a1(const evidentia::Frame& f) { return evidentia::possibility_focal(f, "A1"); }
inline FocalElement a2(const evidentia::Frame& f) { return evidentia::possibility_focal(f, "A2"); }
inline FocalElement overlap(const evidentia::Frame& f) {
    std::vector<std::string> names{"A1", "A2"};
    return evidentia::intersection_focal(f, names);
}

inline BodyOfEvidence<Rational> step1(FramePtr f) {
    return BodyOfEvidence<Rational>::make(
        f,
        {{a1(*f), Rational(1, 3)}, {a2(*f), Rational(1, 3)}, {FocalElement::theta(), Rational(1, 3)}},
        Regime::closed);
}

/// The categorical third body of the decided variant.
inline BodyOfEvidence<Rational> third_decided(FramePtr f) {
    return BodyOfEvidence<Rational>::make(f, {{a2(*f), Rational(1)}}, Regime::closed);
}

/// The vacuous third body of the undecided variant.
inline BodyOfEvidence<Rational> third_undecided(FramePtr f) {
    return BodyOfEvidence<Rational>::vacuous(f);
}

inline BodyOfEvidence<Rational> step2(FramePtr f) {
    return BodyOfEvidence<Rational>::make(f,
                                          {{a1(*f), Rational(3, 9)},
                                           {a2(*f), Rational(3, 9)},
                                           {overlap(*f), Rational(2, 9)},
                                           {FocalElement::theta(), Rational(1, 9)}},
                                          Regime::closed);
}

inline BodyOfEvidence<Rational> step3_decided(FramePtr f) {
    return BodyOfEvidence<Rational>::make(
        f, {{a2(*f), Rational(4, 9)}, {overlap(*f), Rational(5, 9)}}, Regime::closed);
}

inline BodyOfEvidence<Rational> step3_undecided(FramePtr f) { return step2(f); }

} // namespace fixtures
