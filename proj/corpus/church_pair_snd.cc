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

-- A non-dependent use of the second component of a dependent pair.
def Sigma : (A : Type 0) -> (A -> Type 0) -> Type 1
  := fun (A : Type 0) (B : A -> Type 0) => (R : Type 0) -> ((x : A) -> B x -> R) -> R;
def pair : (A : Type 0) -> (B : A -> Type 0) -> (x : A) -> B x -> Sigma A B
  := fun (A : Type 0) (B : A -> Type 0) (x : A) (y : B x)
         (R : Type 0) (k : (x : A) -> B x -> R) => k x y;
def F : Nat -> Type 0 := fun (n : Nat) => Nat -> Nat;
main pair Nat F 3 (fun (m : Nat) => add m 3) Nat (fun (x : Nat) (y : F x) => y x);
