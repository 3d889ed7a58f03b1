-- Copyright 2026 The ccdefun Authors. All Rights Reserved.
--
-- Licensed under the Apache License, Version 2.0 (the "License");
-- you may not use this file except in compliance with the License.
-- You may obtain a copy of the License at
--
--     http://www.apache.org/licenses/LICENSE-2.0
--
-- Unless required by applicable law or agreed to in writing, software
-- distributed under the License is distributed on an "AS IS" BASIS,
-- WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
-- See the License for the specific language governing permissions and
-- limitations under the License.

-- Substitution creates a function that occurs in neither the context nor
-- the term: the type of the application mentions a new abstraction.
axiom A : (Nat -> Nat) -> Type 0;
axiom a : (f : Nat -> Nat) -> A (fun (n : Nat) => add 1 (f n));
main a (fun (x : Nat) => add 1 x);
