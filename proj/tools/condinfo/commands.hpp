#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace condinfo::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNotImplied = 1,
    kUsageError = 2,
    kFormatError = 3,
};

struct CommonOptions {
    std::string out;  // empty: stdout
    std::string format = "json";
    std::uint64_t cap = 31;
    bool closed_form = false;
};

struct ConstructJob {
    CommonOptions common;
    std::optional<std::uint64_t> q;
};

struct EntropyJob {
    CommonOptions common;
    std::string input;  // distribution file
    std::optional<std::uint64_t> q;
};

struct EvalJob {
    CommonOptions common;
    std::string input;  // entropy-vector file
    std::optional<std::uint64_t> q;
    std::string expr;
};

struct CheckJob {
    CommonOptions common;
    std::string expr;
    std::vector<std::string> eqs;
    std::optional<std::string> kappa;
    std::string vars;
};

struct KappaScanJob {
    CommonOptions common;
    std::vector<std::uint64_t> q_list;
    std::vector<std::string> kappas;
    std::uint64_t q_max = 100000;
};

int run_construct(const ConstructJob& job);
int run_entropy(const EntropyJob& job);
int run_eval(const EvalJob& job);
int run_check(const CheckJob& job);
int run_kappa_scan(const KappaScanJob& job);

}  // namespace condinfo::cli
