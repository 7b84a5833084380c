#ifndef HURZETA_HURZETA_HPP
#define HURZETA_HURZETA_HPP

#include <hurzeta/bernoulli.hpp>
#include <hurzeta/error.hpp>
#include <hurzeta/hurwitz.hpp>
#include <hurzeta/rational.hpp>
#include <hurzeta/report_io.hpp>
#include <hurzeta/version.hpp>
#include <hurzeta/zero_analysis.hpp>

#endif // HURZETA_HURZETA_HPP
