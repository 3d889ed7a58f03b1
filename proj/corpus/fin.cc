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

-- Fin-style encoding: an index-respecting eliminator over Nat-indexed families.
def Fin : Nat -> Type 1
  := fun (n : Nat) => (F : Nat -> Type 0) -> ((k : Nat) -> F (add k 1)) ->
                      ((k : Nat) -> F k -> F (add k 1)) -> F n;
def fz : (k : Nat) -> Fin (add k 1)
  := fun (k : Nat) (F : Nat -> Type 0) (z : (j : Nat) -> F (add j 1))
         (s : (j : Nat) -> F j -> F (add j 1)) => z k;
def fs : (k : Nat) -> Fin k -> Fin (add k 1)
  := fun (k : Nat) (i : Fin k) (F : Nat -> Type 0) (z : (j : Nat) -> F (add j 1))
         (s : (j : Nat) -> F j -> F (add j 1)) => s k (i F z s);
def toNat : (n : Nat) -> Fin n -> Nat
  := fun (n : Nat) (i : Fin n) =>
       i (fun (m : Nat) => Nat) (fun (m : Nat) => 0) (fun (m : Nat) (r : Nat) => add r 1);
main toNat 3 (fs 2 (fs 1 (fz 0)));
