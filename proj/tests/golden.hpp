/* Copyright 2026 The ccdefun Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CCDEFUN_TESTS_GOLDEN_HPP
#define CCDEFUN_TESTS_GOLDEN_HPP

namespace ccdefun::testing {

/// Label context of the defunctionalized fully dependent compose.
inline constexpr const char* kDependentComposeLabels = R"(
label l5 {A : Type 0, B : (x : A) -> Type 0, C : (x : A) -> (y : B x) -> Type 0,
          f : (x : A) -> (y : B x) -> C x y, g : (x : A) -> B x}
  (x : A) -> C x (g x) := f x (g x);
label l4 {A : Type 0, B : (x : A) -> Type 0, C : (x : A) -> (y : B x) -> Type 0,
          f : (x : A) -> (y : B x) -> C x y}
  (g : (x : A) -> B x) -> (x : A) -> C x (g x) := l5{A, B, C, f, g};
label l3 {A : Type 0, B : (x : A) -> Type 0, C : (x : A) -> (y : B x) -> Type 0}
  (f : (x : A) -> (y : B x) -> C x y) ->
  (g : (x : A) -> B x) -> (x : A) -> C x (g x) := l4{A, B, C, f};
label l2 {A : Type 0, B : (x : A) -> Type 0}
  (C : (x : A) -> (y : B x) -> Type 0) -> (f : (x : A) -> (y : B x) -> C x y) ->
  (g : (x : A) -> B x) -> (x : A) -> C x (g x) := l3{A, B, C};
label l1 {A : Type 0}
  (B : (x : A) -> Type 0) -> (C : (x : A) -> (y : B x) -> Type 0) ->
  (f : (x : A) -> (y : B x) -> C x y) ->
  (g : (x : A) -> B x) -> (x : A) -> C x (g x) := l2{A, B};
label l0 {}
  (A : Type 0) -> (B : (x : A) -> Type 0) -> (C : (x : A) -> (y : B x) -> Type 0) ->
  (f : (x : A) -> (y : B x) -> C x y) ->
  (g : (x : A) -> B x) -> (x : A) -> C x (g x) := l1{A};
)";

/// The Pi type of the fully dependent compose.
inline constexpr const char* kDependentComposeType =
    "(A : Type 0) -> (B : (x : A) -> Type 0) -> (C : (x : A) -> (y : B x) -> Type 0) -> "
    "(f : (x : A) -> (y : B x) -> C x y) -> (g : (x : A) -> B x) -> (x : A) -> C x (g x)";

/// Label context of the simply-typed compose over base types A, B and C,
/// closures listing only the term variables.
inline constexpr const char* kSimpleComposeLabels = R"(
label l3 {f : B -> C, g : A -> B} (x : A) -> C := f (g x);
label l2 {f : B -> C} (g : A -> B) -> A -> C := l3{f, g};
label l1 {} (f : B -> C) -> (A -> B) -> A -> C := l2{f};
)";

/// The same figure with Nat for every base type, a closed label context.
inline constexpr const char* kSimpleComposeNatLabels = R"(
label l3 {f : Nat -> Nat, g : Nat -> Nat} (x : Nat) -> Nat := f (g x);
label l2 {f : Nat -> Nat} (g : Nat -> Nat) -> Nat -> Nat := l3{f, g};
label l1 {} (f : Nat -> Nat) -> (Nat -> Nat) -> Nat -> Nat := l2{f};
)";

}  // namespace ccdefun::testing

#endif  // CCDEFUN_TESTS_GOLDEN_HPP
