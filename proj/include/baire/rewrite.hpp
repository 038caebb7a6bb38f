#pragma once

#include "baire/formula.hpp"

namespace baire {

// Tree-side helper formulas. Variables are first order unless uppercase.
namespace s2s {
Formula root(const std::string& x, std::set<std::string>& used);
Formula path(const std::string& P, std::set<std::string>& used);
Formula dense(const std::string& X, std::set<std::string>& used);
Formula meets_infinitely(const std::string& P, const std::string& X, std::set<std::string>& used);
// Y is the path chosen by the labels of X: go left exactly at nodes in X.
Formula f_relation(const std::string& X, const std::string& Y, std::set<std::string>& used);
Formula on_leftmost_branch(const std::string& x, std::set<std::string>& used);
}  // namespace s2s

// catpath P. phi  =>  ex2 X. (dense(X) & all2 P. (path(P) & P meets X infinitely often -> phi))
Formula rewrite_category_path(const Formula& f);
// meas1path Y. psi  =>  meas1 X. ex2 Y. (f(X,Y) & psi)
Formula rewrite_measure_path(const Formula& f);
// meas1path P. psi  =>  ex2 Y. (U1(Y) & all2 P. (path(P) & ~(P meets Y infinitely often) -> psi))
Formula rewrite_u1(const Formula& f);
// Word formula relativized to the leftmost branch of the binary tree.
Formula interpret_s1s_in_s2s(const Formula& f);

}  // namespace baire
