/*
 * The standard genetic code as a GeneticCode fixture: 64 codons, 20
 * amino acids (stops belong to none), with categorical position
 * evidence. Nucleotide N at position k testifies exactly "the codon
 * lies in the subset of codons whose k-th letter is N", so the three
 * bodies of a codon intersect down to that single codon.
 */

#pragma once

#include <evidentia/evidentia.hpp>

#include <map>
#include <string>
#include <vector>

namespace standard_code {

using evidentia::BodyOfEvidence;
using evidentia::FocalElement;
using evidentia::FramePtr;
using evidentia::GeneticCode;
using evidentia::Regime;
using evidentia::SubsetMask;

inline const std::map<std::string, std::vector<std::string>>& amino_acids() {
    static const std::map<std::string, std::vector<std::string>> table{
        {"Ala", {"GCU", "GCC", "GCA", "GCG"}},
        {"Arg", {"CGU", "CGC", "CGA", "CGG", "AGA", "AGG"}},
        {"Asn", {"AAU", "AAC"}},
        {"Asp", {"GAU", "GAC"}},
        {"Cys", {"UGU", "UGC"}},
        {"Gln", {"CAA", "CAG"}},
        {"Glu", {"GAA", "GAG"}},
        {"Gly", {"GGU", "GGC", "GGA", "GGG"}},
        {"His", {"CAU", "CAC"}},
        {"Ile", {"AUU", "AUC", "AUA"}},
        {"Leu", {"UUA", "UUG", "CUU", "CUC", "CUA", "CUG"}},
        {"Lys", {"AAA", "AAG"}},
        {"Met", {"AUG"}},
        {"Phe", {"UUU", "UUC"}},
        {"Pro", {"CCU", "CCC", "CCA", "CCG"}},
        {"Ser", {"UCU", "UCC", "UCA", "UCG", "AGU", "AGC"}},
        {"Thr", {"ACU", "ACC", "ACA", "ACG"}},
        {"Trp", {"UGG"}},
        {"Tyr", {"UAU", "UAC"}},
        {"Val", {"GUU", "GUC", "GUA", "GUG"}},
    };
    return table;
}

inline std::vector<std::string> codons() {
    std::vector<std::string> out;
    for (char a : evidentia::nucleotides)
        for (char b : evidentia::nucleotides)
            for (char c : evidentia::nucleotides) out.push_back({a, b, c});
    return out;
}

inline FramePtr frame() { return evidentia::make_frame(codons(), amino_acids()); }

/// Amino acid coded by a codon, empty for the three stop codons.
inline std::string amino_of(const std::string& codon) {
    for (const auto& [name, members] : amino_acids())
        for (const auto& member : members)
            if (member == codon) return name;
    return {};
}

template <class M>
GeneticCode<M> code() {
    FramePtr f = frame();
    typename GeneticCode<M>::EvidenceTable table;
    for (std::size_t pos = 0; pos < 3; ++pos) {
        for (char nt : evidentia::nucleotides) {
            SubsetMask mask(f->size());
            const auto& ground = f->ground();
            for (std::size_t i = 0; i < ground.size(); ++i)
                if (ground[i][pos] == nt) mask.set(i);
            auto body = BodyOfEvidence<M>::make(
                f, {{FocalElement::subset(mask), evidentia::MassTraits<M>::one()}},
                Regime::closed);
            table[pos].emplace(nt, std::move(body));
        }
    }
    return GeneticCode<M>("standard", f, std::move(table));
}

} // namespace standard_code
