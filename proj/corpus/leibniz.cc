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

-- Leibniz equality: transport along reflexivity.
def Eq : (A : Type 0) -> A -> A -> Type 1
  := fun (A : Type 0) (x : A) (y : A) => (P : A -> Type 0) -> P x -> P y;
def refl : (A : Type 0) -> (x : A) -> Eq A x x
  := fun (A : Type 0) (x : A) (P : A -> Type 0) (p : P x) => p;
main refl Nat (add 1 1) (fun (n : Nat) => Nat) 9;
