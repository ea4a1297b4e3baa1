/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef REVEX_GUARD_REVEX_ERROR_HH
#define REVEX_GUARD_REVEX_ERROR_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revex
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Operands disagree on signature, domain size or map shape.
    class MismatchError : public Error
    {
        public:
            using Error::Error;
    };

    /// An operation was called outside its documented precondition.
    class PreconditionError : public Error
    {
        public:
            using Error::Error;
    };

    /// A search or enumeration would exceed its configured budget.
    class BudgetExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// Input files that are not well-formed structures, specifications or formulas.
    class FormatError : public Error
    {
        public:
            using Error::Error;
    };

    class EvaluationError : public Error
    {
        public:
            using Error::Error;
    };

    class SyntaxError : public Error
    {
        private:
            std::size_t _position;

        public:
            SyntaxError(const std::string & message, std::size_t position) :
                Error("syntax error at column " + std::to_string(position + 1) + ": " + message),
                _position(position)
            {
            }

            auto position() const -> std::size_t
            {
                return _position;
            }
    };
}

#endif
